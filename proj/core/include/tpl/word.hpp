#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tpl {

// Monoid flavors. B admits only sigma tokens; PM adds pre-crossings; TM adds
// ties; TSM = sigma + singular + tie; TPM = sigma + pre + tie.
enum class Flavor : unsigned char { B, PM, TM, TSM, TPM };

std::string_view flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(std::string_view name);

// Generator tokens. Only sigma tokens have formal inverses.
enum class TokenKind : unsigned char {
  SigmaPos,   // s<i> : positive crossing, left strand over
  SigmaNeg,   // S<i> : negative crossing, left strand under
  Pre,        // p<i> : pre-crossing (undetermined sign)
  Singular,   // t<i> : singular crossing
  Tie,        // e<i> : tie between adjacent strands i, i+1
};

struct Token {
  TokenKind kind;
  int index;  // 1-based strand index, 1 <= index <= n-1

  friend auto operator<=>(const Token&, const Token&) = default;
};

Token sigma(int i);
Token sigma_inv(int i);
Token pre(int i);
Token singular(int i);
Token tie(int i);

// True when the token kind is admitted by the flavor's alphabet.
bool kind_legal(Flavor f, TokenKind k);

// A word in one of the monoids: a token sequence over n strands.
// The empty sequence is the identity.
struct Word {
  int n = 1;
  Flavor flavor = Flavor::B;
  std::vector<Token> tokens;

  friend auto operator<=>(const Word&, const Word&) = default;
};

// Checks strand count, token legality for the flavor, and index bounds.
// Returns std::nullopt when valid, otherwise a message naming the first
// offending token.
std::optional<std::string> validate_word(const Word& w);

// Top-to-bottom, left-to-right composition. Sigma, pre and singular tokens
// act as the transposition (i, i+1); ties act as the identity. image[i-1] is
// the bottom position of the strand entering at top position i.
struct Permutation {
  int n = 1;
  std::vector<int> image;  // 1-based values, image.size() == n

  int operator()(int i) const { return image[static_cast<std::size_t>(i) - 1]; }
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation identity_permutation(int n);
Permutation permutation_of(const Word& w);

// Number of cycles of the permutation (= closure component count for a
// tie-free braid word).
int cycle_count(const Permutation& p);

// The defining word of the generalized tie joining strands i and j:
//   sigma_i ... sigma_{j-2}  e_{j-1}  sigma_{j-2}^{-1} ... sigma_i^{-1}
// with the conventions (i, i) -> empty word and (i, i+1) -> e_i.
// Requires 1 <= i <= j <= n.
Word expand_generalized_tie(int i, int j, int n, Flavor flavor = Flavor::TM);

// Token sequence form, for splicing into larger words.
std::vector<Token> generalized_tie_tokens(int i, int j);

// The isomorphism TSM -> TPM: t<i> -> p<i>, all other tokens fixed.
Word map_flavor_mu(const Word& w);

// Text form: tokens are "s<i>", "S<i>", "p<i>", "t<i>", "e<i>", and the
// parse-time shorthand "E<i>,<j>" which expands via the generalized-tie
// definition. Serialization never emits "E".
std::string token_text(const Token& t);
std::string word_text(const Word& w);  // tokens only, space separated

// Full file form: header "n=<int> flavor=<name>" then whitespace-separated
// tokens (may span lines).
std::string serialize_word(const Word& w);
// Returns the parsed word or an error message.
struct ParseResult {
  std::optional<Word> word;
  std::string error;
};
ParseResult parse_word(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Word& w);

// Deterministic hash for interning words in searches.
struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace tpl
