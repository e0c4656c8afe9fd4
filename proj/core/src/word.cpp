#include "tpl/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tpl {

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::B: return "B";
    case Flavor::PM: return "PM";
    case Flavor::TM: return "TM";
    case Flavor::TSM: return "TSM";
    case Flavor::TPM: return "TPM";
  }
  return "?";
}

std::optional<Flavor> flavor_from_name(std::string_view name) {
  if (name == "B") return Flavor::B;
  if (name == "PM") return Flavor::PM;
  if (name == "TM") return Flavor::TM;
  if (name == "TSM") return Flavor::TSM;
  if (name == "TPM") return Flavor::TPM;
  return std::nullopt;
}

Token sigma(int i) { return Token{TokenKind::SigmaPos, i}; }
Token sigma_inv(int i) { return Token{TokenKind::SigmaNeg, i}; }
Token pre(int i) { return Token{TokenKind::Pre, i}; }
Token singular(int i) { return Token{TokenKind::Singular, i}; }
Token tie(int i) { return Token{TokenKind::Tie, i}; }

bool kind_legal(Flavor f, TokenKind k) {
  switch (k) {
    case TokenKind::SigmaPos:
    case TokenKind::SigmaNeg:
      return true;
    case TokenKind::Pre:
      return f == Flavor::PM || f == Flavor::TPM;
    case TokenKind::Singular:
      return f == Flavor::TSM;
    case TokenKind::Tie:
      return f == Flavor::TM || f == Flavor::TSM || f == Flavor::TPM;
  }
  return false;
}

std::optional<std::string> validate_word(const Word& w) {
  if (w.n < 1) return "strand count must be at least 1";
  for (std::size_t k = 0; k < w.tokens.size(); ++k) {
    const Token& t = w.tokens[k];
    if (!kind_legal(w.flavor, t.kind)) {
      return "token " + std::to_string(k + 1) + " (" + token_text(t) +
             ") not admitted by flavor " + std::string(flavor_name(w.flavor));
    }
    if (t.index < 1 || t.index > w.n - 1) {
      return "token " + std::to_string(k + 1) + " (" + token_text(t) +
             ") index out of range for n=" + std::to_string(w.n);
    }
  }
  return std::nullopt;
}

Permutation identity_permutation(int n) {
  Permutation p;
  p.n = n;
  p.image.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) p.image[static_cast<std::size_t>(i) - 1] = i;
  return p;
}

Permutation permutation_of(const Word& w) {
  // pos[i-1] = current position of the strand that entered at top position i.
  std::vector<int> pos(static_cast<std::size_t>(w.n));
  for (int i = 1; i <= w.n; ++i) pos[static_cast<std::size_t>(i) - 1] = i;
  for (const Token& t : w.tokens) {
    if (t.kind == TokenKind::Tie) continue;
    for (int& p : pos) {
      if (p == t.index) p = t.index + 1;
      else if (p == t.index + 1) p = t.index;
    }
  }
  Permutation s;
  s.n = w.n;
  s.image = std::move(pos);
  return s;
}

int cycle_count(const Permutation& p) {
  std::vector<char> seen(static_cast<std::size_t>(p.n), 0);
  int cycles = 0;
  for (int i = 1; i <= p.n; ++i) {
    if (seen[static_cast<std::size_t>(i) - 1]) continue;
    ++cycles;
    int j = i;
    while (!seen[static_cast<std::size_t>(j) - 1]) {
      seen[static_cast<std::size_t>(j) - 1] = 1;
      j = p(j);
    }
  }
  return cycles;
}

std::vector<Token> generalized_tie_tokens(int i, int j) {
  std::vector<Token> out;
  if (i == j) return out;
  if (j == i + 1) {
    out.push_back(tie(i));
    return out;
  }
  for (int k = i; k <= j - 2; ++k) out.push_back(sigma(k));
  out.push_back(tie(j - 1));
  for (int k = j - 2; k >= i; --k) out.push_back(sigma_inv(k));
  return out;
}

Word expand_generalized_tie(int i, int j, int n, Flavor flavor) {
  if (i < 1 || j < i || j > n) {
    throw std::out_of_range("generalized tie indices must satisfy 1 <= i <= j <= n");
  }
  Word w;
  w.n = n;
  w.flavor = flavor;
  w.tokens = generalized_tie_tokens(i, j);
  return w;
}

Word map_flavor_mu(const Word& w) {
  Word out = w;
  out.flavor = Flavor::TPM;
  for (Token& t : out.tokens) {
    if (t.kind == TokenKind::Singular) t.kind = TokenKind::Pre;
  }
  return out;
}

std::string token_text(const Token& t) {
  char c = '?';
  switch (t.kind) {
    case TokenKind::SigmaPos: c = 's'; break;
    case TokenKind::SigmaNeg: c = 'S'; break;
    case TokenKind::Pre: c = 'p'; break;
    case TokenKind::Singular: c = 't'; break;
    case TokenKind::Tie: c = 'e'; break;
  }
  return c + std::to_string(t.index);
}

std::string word_text(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.tokens.size(); ++k) {
    if (k) out += ' ';
    out += token_text(w.tokens[k]);
  }
  return out;
}

std::string serialize_word(const Word& w) {
  std::string out = "n=" + std::to_string(w.n) +
                    " flavor=" + std::string(flavor_name(w.flavor)) + "\n";
  out += word_text(w);
  out += '\n';
  return out;
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  long v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + (c - '0');
    if (v > 1'000'000) return false;
  }
  out = static_cast<int>(v);
  return true;
}

}  // namespace

ParseResult parse_word(std::string_view text) {
  ParseResult r;
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) {
    r.error = "empty input; expected header line 'n=<int> flavor=<name>'";
    return r;
  }
  std::istringstream hs(header);
  std::string na, fa;
  if (!(hs >> na >> fa) || na.rfind("n=", 0) != 0 || fa.rfind("flavor=", 0) != 0) {
    r.error = "bad header '" + header + "'; expected 'n=<int> flavor=<name>'";
    return r;
  }
  Word w;
  if (!parse_int(na.substr(2), w.n) || w.n < 1) {
    r.error = "bad strand count in header '" + header + "'";
    return r;
  }
  auto fl = flavor_from_name(fa.substr(7));
  if (!fl) {
    r.error = "unknown flavor in header '" + header + "'";
    return r;
  }
  w.flavor = *fl;

  // Tokens may follow on the header line or on later lines.
  auto take = [&](const std::string& tok) -> std::optional<std::string> {
    char c = tok[0];
    std::string_view rest = std::string_view(tok).substr(1);
    if (c == 'E') {
      auto comma = rest.find(',');
      int i = 0, j = 0;
      if (comma == std::string_view::npos || !parse_int(rest.substr(0, comma), i) ||
          !parse_int(rest.substr(comma + 1), j) || i < 1 || j < i || j > w.n) {
        return "bad generalized tie token '" + tok + "'";
      }
      auto expanded = generalized_tie_tokens(i, j);
      w.tokens.insert(w.tokens.end(), expanded.begin(), expanded.end());
      return std::nullopt;
    }
    TokenKind kind;
    switch (c) {
      case 's': kind = TokenKind::SigmaPos; break;
      case 'S': kind = TokenKind::SigmaNeg; break;
      case 'p': kind = TokenKind::Pre; break;
      case 't': kind = TokenKind::Singular; break;
      case 'e': kind = TokenKind::Tie; break;
      default:
        return "unknown token '" + tok + "'";
    }
    int idx = 0;
    if (!parse_int(rest, idx)) {
      return "bad index in token '" + tok + "'";
    }
    w.tokens.push_back(Token{kind, idx});
    return std::nullopt;
  };
  std::string tok;
  while (hs >> tok || in >> tok) {
    if (auto err = take(tok)) {
      r.error = *err;
      return r;
    }
  }
  if (auto err = validate_word(w)) {
    r.error = *err;
    return r;
  }
  r.word = std::move(w);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << "[" << flavor_name(w.flavor) << " n=" << w.n << " "
            << word_text(w) << "]";
}

std::size_t WordHash::operator()(const Word& w) const {
  // FNV-1a over the packed token stream plus the header fields.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(w.n));
  mix(static_cast<std::uint64_t>(w.flavor));
  for (const Token& t : w.tokens) {
    mix((static_cast<std::uint64_t>(t.kind) << 32) |
        static_cast<std::uint32_t>(t.index));
  }
  return static_cast<std::size_t>(h);
}

}  // namespace tpl
