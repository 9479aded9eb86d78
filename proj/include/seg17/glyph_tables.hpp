#pragma once

#include <seg17/segment.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seg17
{

/// Digit values beyond 0..9 that a table may carry (Tamil ten, hundred and
/// thousand signs). A table carries either none of them or all three.
inline constexpr std::array<std::uint32_t, 3> extension_values = { 10u, 100u, 1000u };

/// 4-bit decoder code of a digit value: 0..9 map to themselves, the
/// extension values to 10, 11 and 12. Empty for anything else.
std::optional<std::uint32_t> digit_code( std::uint32_t value ) noexcept;

/// Inverse of digit_code.
std::optional<std::uint32_t> value_from_code( std::uint32_t code ) noexcept;

struct glyph_row
{
  std::uint32_t value = 0;
  segment_set set;

  friend bool operator==( glyph_row const&, glyph_row const& ) = default;
};

/// One script's digit patterns plus the language names that share them.
struct script_table
{
  int id = 0;
  std::string key;
  std::string display_name;
  std::vector<std::string> languages;
  std::vector<glyph_row> glyphs; ///< ascending by value
  std::optional<char32_t> codepoint_base;

  bool supports( std::uint32_t value ) const noexcept;
  bool has_extension_values() const noexcept;

  /// Native codepoint of a digit value, if the script has a digit block.
  /// Extension values sit right after nine (base + digit code).
  std::optional<char32_t> codepoint_of( std::uint32_t value ) const noexcept;

  friend bool operator==( script_table const&, script_table const& ) = default;
};

struct validation_report
{
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return errors.empty(); }
};

/// Structural checks plus duplicate-pattern findings. Errors cover id
/// sequencing, digit coverage, empty patterns, duplicate rows and
/// conflicting aliases; warnings cover patterns shared by two digits of one
/// table and patterns shared across tables. Ordering is deterministic.
validation_report validate( std::span<script_table const> tables );

/// Immutable, validated set of script tables with a case-insensitive alias
/// index over table keys and language names.
class registry
{
public:
  /// Throws error_kind::validation when validate() reports errors.
  static registry from_tables( std::vector<script_table> tables );

  std::span<script_table const> tables() const noexcept { return tables_; }
  script_table const& table( int id ) const;

  /// Resolves a table key or any language alias, case-insensitively.
  script_table const& lookup( std::string_view name ) const;

  /// Lowercase language name -> table id (keys are not included).
  std::map<std::string, int> const& alias_index() const noexcept { return aliases_; }

  std::size_t glyph_count() const noexcept;

  friend bool operator==( registry const& a, registry const& b ) { return a.tables_ == b.tables_; }

private:
  std::vector<script_table> tables_;
  std::map<std::string, int> aliases_;
};

/// Exact transcribed pattern; throws unsupported_value otherwise.
segment_set glyph( script_table const& script, std::uint32_t value );

validation_report validate( registry const& r );

/// Parses SEGTAB/1 text. Throws error_kind::parse with a line number, or
/// error_kind::validation when the tables fail structural checks.
registry load_tables( std::string_view source );

/// Serializes to SEGTAB/1; load_tables(emit_tables(r)) == r.
std::string emit_tables( registry const& r );

/// The embedded SEGTAB/1 transcription of the 17 numeral tables.
std::string_view canonical_segtab() noexcept;

/// Lazily loaded registry built from canonical_segtab().
registry const& canonical_registry();

} // namespace seg17
