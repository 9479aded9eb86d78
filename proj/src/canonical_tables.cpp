#include <seg17/glyph_tables.hpp>

namespace seg17
{

namespace
{

// Combination vectors of the 17 numeral tables, one block per script in
// figure order. Segment lists are normalized to canonical order.
constexpr std::string_view canonical_text = R"segtab(
SEGTAB/1

script 0 bengali "Bengali-Assamese" langs=Bengali,Assamese zero=U+09E6
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,a2,b,c,d1,d2,e,g1,l
glyph 2 a1,a2,b,d1,d2,e,g1,g2
glyph 3 a2,b,c,d1,d2,e,f,g2,i
glyph 4 a1,a2,b,c,d1,d2,e,f,g1,g2
glyph 5 a1,c,d1,d2,e,f,g2,i
glyph 6 c,d1,d2,e,f,g2,i
glyph 7 a1,a2,b,c,f,g1,g2
glyph 8 d1,e,f,g1,j,l
glyph 9 a1,a2,b,c,d2,e,g1,l

script 1 dogri "Dogri" langs=Dogri zero=none
glyph 0 a1,f,g1,i
glyph 1 a1,e,f,i,l
glyph 2 a1,d1,g1,i,l
glyph 3 a1,d1,g1,i,l,p
glyph 4 d1,h,j,l,m
glyph 5 f,g1,i,l
glyph 6 a1,g1,h,i,l
glyph 7 a2,b,c,g2,i
glyph 8 a1,d1,f,g1,l
glyph 9 a1,a2,d1,e,f,g1,l

script 2 gujarati "Gujarati" langs=Gujarati zero=U+0AE6
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,f,g1,i,l,p
glyph 2 a2,b,g2,k
glyph 3 a1,a2,b,c,d1,d2,g2
glyph 4 d1,h,j,l,m
glyph 5 a1,b,c,g2,i
glyph 6 a1,a2,d1,e,f,g1,g2,p
glyph 7 a2,b,c,d1,d2,e,f,i
glyph 8 d1,d2,j,m
glyph 9 d1,d2,e,f,j,m

script 3 devanagari "Devanagari" langs=Bodo,Hindi,Konkani,Marathi,Nepali,Sanskrit zero=U+0966
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,d1,f,g1,i,m,p
glyph 2 a1,d1,i,l,p
glyph 3 a1,d1,g1,i,l,p
glyph 4 d1,h,j,l,m
glyph 5 d1,e,f,l,p
glyph 6 a1,d1,e,f,g1,p
glyph 7 a2,b,c,d1,d2,e,f,g2,i
glyph 8 d1,d2,j,m
glyph 9 a2,b,d2,g2,i,k

script 4 kannada "Kannada" langs=Kannada zero=U+0CE6
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,a2,b,c,d1,e,f
glyph 2 a2,b,c,d1,d2,i,j
glyph 3 a1,d1,i,m,p
glyph 4 a1,d1,h,j,l,m
glyph 5 a1,b,d1,g2,i,j,k,l,m
glyph 6 d1,d2,e,f,g1
glyph 7 a2,b,d1,d2,g2,m
glyph 8 a2,d1,e,f,i,l
glyph 9 a1,a2,d1,e,f,g1

script 5 kashmiri "Kashmiri" langs=Kashmiri zero=U+06F0
glyph 0 a1,f,g1,i
glyph 1 e,f
glyph 2 e,f,g1,i
glyph 3 b,e,f,g1,g2,i
glyph 4 a1,d1,h,m
glyph 5 d1,d2,e,f,h,k
glyph 6 b,c,g2,i
glyph 7 b,c,h,k
glyph 8 b,c,j,m
glyph 9 a2,b,c,g2,i

script 6 maithili "Maithili" langs=Maithili zero=U+0966
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,a2,b,c,d1,d2,e,g1,l
glyph 2 a1,a2,b,d1,d2,e,g1,g2
glyph 3 a2,b,c,d2,g2,p
glyph 4 d1,h,j,l,m
glyph 5 a1,a2,c,d1,d2,e,g2,i
glyph 6 c,d1,d2,e,f,g2,i
glyph 7 a2,b,c,i
glyph 8 d1,g2,i,l,m
glyph 9 b,c,d2,e,g1,l

script 7 malayalam "Malayalam" langs=Malayalam zero=U+0D66
glyph 0 a1,a2,d1,e,f,g1,l
glyph 1 a2,b,d1,g2,i,m
glyph 2 d2,e,g1,l
glyph 3 c,e,g1,g2,l
glyph 4 a2,b,c,d2,e,g1,g2,l
glyph 5 a1,a2,b,d1,e,f,g1,h,i,l
glyph 6 a1,a2,b,c,e,f,i,l
glyph 7 a1,a2,b,d1,e,f,l,m
glyph 8 b,c,d2,e,g1,l,p
glyph 9 a2,b,c,d2,e,f,g1,g2,l

script 8 manipuri "Manipuri" langs=Manipuri zero=U+ABF0
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,a2,d1,f,g1,l
glyph 2 a1,a2,d1,f,g1,l,m
glyph 3 a1,a2,c,d1,f,g1,g2,k,l,m
glyph 4 a1,d1,d2,e,g1,i
glyph 5 a1,a2,f,g1,l
glyph 6 a1,a2,d2,f,g1,l
glyph 7 a1,b,d1,g2,i,j,k,l,m
glyph 8 a1,a2,b,d1,f,g1,l
glyph 9 a1,a2,b,d1,f,g1,k,l,m

script 9 oriya "Oriya" langs=Oriya zero=U+0B66
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,d1,e,f,g1,i
glyph 2 a2,b,c,d2,g2,i
glyph 3 a1,a2,b,c,f,g1,i,l
glyph 4 d1,d2,h,j,k,m
glyph 5 a2,d1,g1,g2,i,j,l,m
glyph 6 a2,b,c,d1,d2,h,i
glyph 7 a1,a2,b,c,d2,i,j
glyph 8 a1,e,f
glyph 9 d1,d2,e,f,h,i

script 10 punjabi "Punjabi" langs=Punjabi zero=U+0A66
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,f,g1,i,l,p
glyph 2 a1,d1,i,l,p
glyph 3 a1,d1,g1,i,l,p
glyph 4 d1,h,j,l,m
glyph 5 f,g1,i,l
glyph 6 a1,a2,d1,e,f,g1
glyph 7 a2,b,c,d1,d2,i
glyph 8 a1,d1,d2,e,f
glyph 9 a1,d1,d2,e,f,h

script 11 santali "Santali" langs=Santali zero=U+1C50
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 d1,d2,e,f,h,i
glyph 2 a1,d1,d2,e,g1,h,i
glyph 3 d1,d2,f,g1,h,i,m
glyph 4 a1,d1,e,f,g1,l
glyph 5 d1,d2,e,f,j,k
glyph 6 a1,d1,d2,e,f,h,i
glyph 7 a1,d1,d2,e,g1,i
glyph 8 b,d1,d2,f,g2,h,j,m
glyph 9 a1,c,d1,d2,e,f,g2

script 12 sindhi "Sindhi" langs=Sindhi zero=none
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,f,g1,i,l,p
glyph 2 a2,b,g2,k
glyph 3 a2,b,c,d2,g2
glyph 4 d1,h,j,l,m
glyph 5 f,g1,i,l,p
glyph 6 a1,d1,e,f,g1
glyph 7 a2,b,c,d1,d2,e,f,g2,i
glyph 8 d1,d2,j,m
glyph 9 d1,d2,e,f,j,m

script 13 tamil "Tamil" langs=Tamil zero=U+0BE6
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,a2,c,e,f,g1,g2,i,m
glyph 2 a1,d1,d2,e,f,g1,i
glyph 3 a1,a2,c,d2,e,f,g2,i,p
glyph 4 a1,a2,b,d1,e,f,g1,g2,i,l
glyph 5 a1,a2,c,d1,d2,e,f,g2,i,l
glyph 6 a1,a2,c,e,f,g1,g2,i,l,m
glyph 7 a1,a2,b,c,d1,e,f,g1,l
glyph 8 a1,b,c,d1,e,g1,g2,h,i,l
glyph 9 a1,a2,c,d1,e,f,g1,g2,i,k,l
glyph 10 b,c,d1,d2,e,f,i,l
glyph 100 a1,a2,b,c,e,f,i,l
glyph 1000 a1,a2,c,d2,e,f,g1,g2,i,m,p

script 14 telugu "Telugu" langs=Telugu zero=U+0C66
glyph 0 a1,a2,b,c,d1,d2,e,f
glyph 1 a1,a2,b,c,d1,e,f
glyph 2 a2,b,c,d1,d2,g2,i
glyph 3 a2,b,c,d2,g2
glyph 4 b,d1,d2,f,g1,g2,k,m
glyph 5 a2,c,g2,h,i,j,m
glyph 6 a1,d1,d2,e,f,g1
glyph 7 a1,a2,b,d1,d2,e,g1,g2
glyph 8 a2,d1,e,f,i,l
glyph 9 a1,a2,d1,e,f,g1

script 15 urdu "Urdu" langs=Urdu zero=U+06F0
glyph 0 a1,f,g1,i
glyph 1 e,f
glyph 2 e,f,g1,i
glyph 3 b,e,f,g1,g2,i
glyph 4 a1,a2,b,e,f,i
glyph 5 d1,d2,e,f,h,k,m
glyph 6 b,c,g2,i
glyph 7 d1,d2,j,m
glyph 8 b,c,j,m
glyph 9 a1,f,g1,i,l

script 16 english "English" langs=English zero=U+0030
glyph 0 a2,b,c,d2,i,l
glyph 1 b,c
glyph 2 a2,b,d2,g2,l
glyph 3 a2,b,c,d2,g2
glyph 4 b,c,g2,i
glyph 5 a2,c,d2,g2,i
glyph 6 a2,c,d2,g2,i,l
glyph 7 a2,b,c
glyph 8 a2,b,c,d2,g2,i,l
glyph 9 a2,b,c,g2,i
)segtab";

} // namespace

std::string_view canonical_segtab() noexcept
{
  // skip the newline that follows the raw-string opener
  return canonical_text.substr( 1 );
}

registry const& canonical_registry()
{
  static registry const instance = load_tables( canonical_segtab() );
  return instance;
}

} // namespace seg17
