#pragma once

#include <string>
#include <vector>

namespace convexcalc {

// A word in the standard generators of a genus-g surface group.
// Letters are nonzero ints: +(k+1) is generator k, -(k+1) its inverse,
// where generator 2(i-1) is a_i and generator 2(i-1)+1 is b_i (1-based i).
using Word = std::vector<int>;

int gen_a(int i);
int gen_b(int i);
int gen_index(int letter);       // 0-based generator index
int letter_key(int letter);      // total order a1 < A1 < b1 < B1 < a2 < ...
std::string letter_name(int letter);

// Accepts both spaced ("a1 b1 A1 B1") and compact ("a1b1A1B1") forms.
Word parse_word(const std::string& text, int genus);
std::string format_word(const Word& w);          // spaced
std::string format_word_compact(const Word& w);

Word inverse_word(const Word& w);
Word concat(const Word& u, const Word& v);
Word conjugated(const Word& w, const Word& u);   // u w u^-1
Word word_pow(const Word& w, int k);

void free_reduce(Word& w);
Word cyclic_reduce(const Word& w);

// Defining relator [a1,b1][a2,b2]...[ag,bg], length 4g.
Word relator(int genus);

// Rewrites any subword matching more than half of a cyclic rotation of the
// relator (or its inverse) with the shorter complement, until none remains.
Word dehn_reduce(Word w, int genus);
Word cyclic_dehn_reduce(Word w, int genus);

bool is_trivial(const Word& w, int genus);
bool equal_elements(const Word& u, const Word& v, int genus);

// Shortlex-least rotation over the closure of the cyclically reduced word
// under exact-half-relator swaps. Canonical invariant of the conjugacy class.
Word canonical_cyclic(const Word& w, int genus);

// Canonical form shared by a class and its inverse; invariant of the
// unoriented curve.
Word unoriented_canonical(const Word& w, int genus);

bool conjugate_elements(const Word& u, const Word& v, int genus);

// Smallest p dividing w.size() with rotation-by-p fixing w.
int cyclic_period(const Word& w);

bool shortlex_less(const Word& a, const Word& b);

} // namespace convexcalc
