#pragma once

#include <string>
#include <string_view>

namespace textcat {

// Porter suffix-stripping stemmer for lowercase English words.
//
// Follows the author's reference implementation, i.e. the published 1980
// algorithm plus its two long-standing amendments (step 2 uses
// "bli" -> "ble" rather than "abli" -> "able", and gains "logi" -> "log").
// Words of length <= 2 are returned unchanged. The output length never
// exceeds the input length plus one (step 1b can append an 'e').
std::string porter_stem(std::string_view word);

}  // namespace textcat
