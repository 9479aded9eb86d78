#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace seg17::utf8
{

/// Strict decoder: rejects overlong forms, surrogates and truncated
/// sequences with error_kind::unmappable_character.
std::vector<char32_t> decode( std::string_view text );

std::string encode( char32_t cp );

} // namespace seg17::utf8
