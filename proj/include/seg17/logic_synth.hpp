#pragma once

#include <seg17/glyph_tables.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seg17
{

/// Decoder inputs: 5 script-select bits s4..s0 above 4 digit-code bits
/// v3..v0. A single-script decoder drops the script bits.
inline constexpr int script_bits = 5;
inline constexpr int code_bits = 4;
inline constexpr int decoder_inputs = script_bits + code_bits;

constexpr std::uint32_t decoder_point( int script_id, std::uint32_t code ) noexcept
{
  return ( static_cast<std::uint32_t>( script_id ) << code_bits ) | code;
}

/// Variable names, most significant input first: s4..s0 (when present)
/// then v3..v0. Supports 1..9 inputs.
std::vector<std::string> decoder_input_names( int num_inputs );

enum class phase : std::uint8_t
{
  off,
  on,
  dont_care
};

/// Onset/offset/don't-care assignment of every input point for each of the
/// 17 segment outputs. The care points are shared by all outputs.
class truth_table
{
public:
  /// All points start as don't-care.
  explicit truth_table( int num_inputs );

  int num_inputs() const noexcept { return num_inputs_; }
  std::uint32_t num_points() const noexcept { return 1u << num_inputs_; }

  phase at( std::size_t output, std::uint32_t point ) const;

  /// Makes `point` a care point: output k is on iff `word` has bit k set.
  void set_care( std::uint32_t point, segment_set word );

  bool is_care( std::uint32_t point ) const;
  std::size_t care_count() const noexcept;

  /// Ascending points of output `output` in the given phase.
  std::vector<std::uint32_t> points( std::size_t output, phase ph ) const;

  /// Same care outputs, with every don't-care point forced to off.
  truth_table without_dont_cares() const;

private:
  int num_inputs_;
  std::vector<std::uint32_t> words_;
  std::vector<bool> care_;
  bool dc_as_off_ = false;
};

/// Full decoder over every script: care points are (script id, code) for
/// codes 0..9, plus codes 10..12 for tables that carry 10/100/1000.
truth_table build_truth_table( registry const& r );

/// Single-script decoder over the 4 digit-code bits only.
truth_table build_truth_table( script_table const& script );

/// Product term; positions set in `mask` are free.
struct implicant
{
  std::uint32_t value = 0;
  std::uint32_t mask = 0;

  constexpr bool covers( std::uint32_t point ) const noexcept { return ( point & ~mask ) == value; }
  int literal_count( int num_inputs ) const noexcept;

  friend constexpr bool operator==( implicant const&, implicant const& ) = default;
  friend constexpr auto operator<=>( implicant const&, implicant const& ) = default;
};

/// How the non-essential part of a cover was chosen.
enum class selection_method : std::uint8_t
{
  essential_only, ///< essential primes already covered the onset
  petrick,        ///< exact minimum over the cyclic core
  greedy          ///< core above the Petrick bounds
};

struct cover
{
  std::size_t output = 0;
  int num_inputs = decoder_inputs;
  std::vector<implicant> implicants; ///< ascending (value, mask)
  int literal_count = 0;
  selection_method method = selection_method::essential_only;

  bool evaluate( std::uint32_t point ) const noexcept;
};

struct minimize_options
{
  /// Exact selection by Petrick's method applies while the cyclic core is
  /// within both bounds; above them selection is greedy.
  std::size_t petrick_max_primes = 20;
  std::size_t petrick_max_minterms = 24;
};

/// All prime implicants of onset ∪ dc that cover at least one onset point,
/// ascending by (value, mask).
std::vector<implicant> prime_implicants( int num_inputs, std::span<std::uint32_t const> onset,
                                         std::span<std::uint32_t const> dont_cares );

/// Quine-McCluskey primes, essential primes, then Petrick or greedy cover
/// of what remains.
cover minimize( truth_table const& t, std::size_t output, minimize_options const& options = {} );

/// One cover per segment, computed in parallel; identical to calling
/// minimize() for each output in turn.
std::vector<cover> minimize_all( truth_table const& t, minimize_options const& options = {} );

struct equivalence_report
{
  bool equivalent = true;
  std::optional<std::uint32_t> counterexample;
  std::string message;
};

/// Exhaustive check over every input point.
equivalence_report verify_cover( cover const& c, truth_table const& t );

/// One line per output: `b = s4' v3 + v2 v1`, or `= 0` / `= 1`.
std::string emit_sop( std::span<cover const> covers );

/// Structural Verilog module with one continuous assignment per output.
std::string emit_hdl( std::span<cover const> covers, std::string_view module_name = "seg17_decoder" );

inline constexpr std::size_t lut_entry_bytes = 3;

/// 512 entries (3 bytes each, least significant byte first) indexed by
/// decoder_point(); don't-care points are zero.
std::vector<std::uint8_t> emit_lut( registry const& r );

/// 16-entry variant indexed by digit code only.
std::vector<std::uint8_t> emit_lut( script_table const& script );

} // namespace seg17
