// Command-line front end: parse word and diagram files, run the library
// operations, and emit deterministic text with conventional exit codes:
//   0  success / equivalent / equal
//   1  distinguished / unequal
//   2  unknown (search or resolution budget exhausted)
//   64 usage error
//   65 input format error

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tpl/braiding.hpp"
#include "tpl/diagram.hpp"
#include "tpl/equivalence.hpp"
#include "tpl/normalize.hpp"
#include "tpl/partition.hpp"
#include "tpl/rewrite.hpp"
#include "tpl/word.hpp"

namespace {

constexpr int kExitDistinguished = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;
constexpr int kExitInternal = 70;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

tpl::Word load_word(const std::string& path) {
  auto r = tpl::parse_word(read_file(path));
  if (!r.word) throw InputError(path + ": " + r.error);
  return *r.word;
}

bool looks_like_diagram(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text.compare(pos, 5, "morse") == 0;
}

// One-line word form used in human-facing listings.
std::string inline_word(const tpl::Word& w) {
  std::string s = "n=" + std::to_string(w.n) + " flavor=";
  s += tpl::flavor_name(w.flavor);
  if (!w.tokens.empty()) {
    s += ' ';
    s += tpl::word_text(w);
  }
  return s;
}

std::string linking_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) s += ' ';
    s += std::to_string(v[k]) + "/2";
  }
  return s + "]";
}

int count_pre(const tpl::MorseDiagram& d) {
  int k = 0;
  for (const auto& e : d.rows)
    if (e.kind == tpl::EventKind::PreCross) ++k;
  return k;
}

void require_cap(int k, int cap) {
  if (k > cap) {
    throw BudgetError(std::to_string(k) +
                      " pre-crossings exceed --max-precrossings=" +
                      std::to_string(cap));
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "Operations on tied/pseudo/singular braid words and their closures.\n"
      "Linking values are printed as doubled integers with a /2 suffix:\n"
      "[3/2] is the half-integer 1.5, [2/2] the integer 1. Input files hold\n"
      "either a word ('n=<int> flavor=<B|PM|TM|TSM|TPM>' then tokens) or a\n"
      "Morse diagram ('morse closed' / 'morse braid n=<int>' then events)."};
  app.require_subcommand(1);
  int seed = 0;
  app.add_option("--seed", seed,
                 "Seed for randomized operations (the built-in subcommands "
                 "are deterministic; accepted for interface stability)");

  std::string path_a, path_b;
  std::uint64_t budget = 200000;
  int cap = 20;
  int threads = 1;
  std::string moves = "markov";

  auto* validate = app.add_subcommand(
      "validate", "Parse a word or diagram file; echo the canonical form");
  validate->add_option("file", path_a)->required();

  auto* perm = app.add_subcommand(
      "perm", "Print the word's strand permutation (images of 1..n)");
  perm->add_option("file", path_a)->required();

  auto* normalize = app.add_subcommand(
      "normalize",
      "Slide ties to the bottom: print the tie-free word and the partition");
  normalize->add_option("file", path_a)->required();

  int ti = 0, tj = 0, tn = 0;
  std::string tflavor = "TM";
  auto* expand = app.add_subcommand(
      "expand-tie", "Print the generalized tie E<i>,<j> as a word");
  expand->add_option("i", ti)->required();
  expand->add_option("j", tj)->required();
  expand->add_option("n", tn)->required();
  expand->add_option("flavor", tflavor, "Flavor of the output word (TM)");

  auto* eqword = app.add_subcommand(
      "eq-word", "Decide equality of two words in their monoid");
  eqword->add_option("first", path_a)->required();
  eqword->add_option("second", path_b)->required();
  eqword->add_option("--budget", budget, "Max words interned (200000)");

  auto* close = app.add_subcommand(
      "close", "Close a braid word into a Morse diagram");
  close->add_option("file", path_a)->required();

  auto* braid = app.add_subcommand(
      "braid", "Braid a closed diagram back into a word");
  braid->add_option("file", path_a)->required();

  auto* fp = app.add_subcommand(
      "fingerprint",
      "Resolution-set invariant of a word's closure or a closed diagram");
  fp->add_option("file", path_a)->required();
  fp->add_option("--max-precrossings", cap,
                 "Refuse beyond this many pre-crossings (20)");

  auto* eqc = app.add_subcommand(
      "eq-closure", "Search for a closure equivalence between two words");
  eqc->add_option("first", path_a)->required();
  eqc->add_option("second", path_b)->required();
  eqc->add_option("--budget", budget, "Max words interned (200000)");
  eqc->add_option("--moves", moves, "Move set: markov | lmove (markov)")
      ->check(CLI::IsMember({"markov", "lmove"}));

  int slot = 0, strand = 1;
  std::string lkind = "over", lkink = "none";
  auto* lmove = app.add_subcommand(
      "lmove", "Apply a strand insertion (L-move) to a braid word");
  lmove->add_option("file", path_a)->required();
  lmove->add_option("--slot", slot, "Token position to cut at")->required();
  lmove->add_option("--strand", strand, "Strand position to cut")->required();
  lmove->add_option("--kind", lkind, "over | under (over)")
      ->check(CLI::IsMember({"over", "under"}));
  lmove->add_option("--kink", lkink, "none | + | - | pre (none)")
      ->check(CLI::IsMember({"none", "+", "-", "pre"}));

  auto* resolve = app.add_subcommand(
      "resolve",
      "List every pre-crossing resolution of a closure with its linking "
      "vector");
  resolve->add_option("file", path_a)->required();
  resolve->add_option("--max-precrossings", cap,
                      "Refuse beyond this many pre-crossings (20)");
  resolve->add_option("--threads", threads, "Worker threads (1)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (validate->parsed()) {
    const std::string text = read_file(path_a);
    if (looks_like_diagram(text)) {
      auto r = tpl::parse_diagram(text);
      if (!r.diagram) throw InputError(path_a + ": " + r.error);
      std::cout << tpl::serialize_diagram(*r.diagram);
    } else {
      auto r = tpl::parse_word(text);
      if (!r.word) throw InputError(path_a + ": " + r.error);
      std::cout << tpl::serialize_word(*r.word);
    }
    return 0;
  }

  if (perm->parsed()) {
    const auto p = tpl::permutation_of(load_word(path_a));
    for (int i = 1; i <= p.n; ++i) std::cout << (i > 1 ? " " : "") << p(i);
    std::cout << '\n';
    return 0;
  }

  if (normalize->parsed()) {
    const auto nf = tpl::normalize_ties(load_word(path_a));
    std::cout << tpl::serialize_word(nf.pure);
    std::cout << "partition=" << tpl::partition_text(nf.part) << '\n';
    return 0;
  }

  if (expand->parsed()) {
    const auto fl = tpl::flavor_from_name(tflavor);
    if (!fl) throw InputError("unknown flavor '" + tflavor + "'");
    std::cout << tpl::serialize_word(
        tpl::expand_generalized_tie(ti, tj, tn, *fl));
    return 0;
  }

  if (eqword->parsed()) {
    const auto res = tpl::words_equal_in_monoid(load_word(path_a),
                                                load_word(path_b), budget);
    if (!res.equal) {
      std::cout << "unknown visited=" << res.visited << '\n';
      return kExitUnknown;
    }
    std::cout << "equal visited=" << res.visited << '\n';
    for (const auto& step : res.certificate)
      std::cout << inline_word(step) << '\n';
    return 0;
  }

  if (close->parsed()) {
    std::cout << tpl::serialize_diagram(tpl::close_braid(load_word(path_a)));
    return 0;
  }

  if (braid->parsed()) {
    auto r = tpl::parse_diagram(read_file(path_a));
    if (!r.diagram) throw InputError(path_a + ": " + r.error);
    std::cout << tpl::serialize_word(tpl::braid_diagram(*r.diagram));
    return 0;
  }

  if (fp->parsed()) {
    const std::string text = read_file(path_a);
    tpl::MorseDiagram d;
    if (looks_like_diagram(text)) {
      auto r = tpl::parse_diagram(text);
      if (!r.diagram) throw InputError(path_a + ": " + r.error);
      d = *r.diagram;
    } else {
      auto r = tpl::parse_word(text);
      if (!r.word) throw InputError(path_a + ": " + r.error);
      d = tpl::close_braid(r.word->flavor == tpl::Flavor::TSM
                               ? tpl::map_flavor_mu(*r.word)
                               : *r.word);
    }
    require_cap(count_pre(d), cap);
    std::cout << tpl::fingerprint_text(tpl::fingerprint(d, cap));
    return 0;
  }

  if (eqc->parsed()) {
    const auto set =
        moves == "markov" ? tpl::MoveSet::Markov : tpl::MoveSet::LMove;
    const auto v = tpl::equivalent_closures(load_word(path_a),
                                            load_word(path_b), budget, set);
    switch (v.verdict) {
      case tpl::Verdict::Equivalent:
        std::cout << "equivalent visited=" << v.visited << '\n'
                  << tpl::certificate_text(v.certificate);
        return 0;
      case tpl::Verdict::Distinguished:
        std::cout << "distinguished\nfirst:\n"
                  << tpl::fingerprint_text(v.fp1) << "second:\n"
                  << tpl::fingerprint_text(v.fp2);
        return kExitDistinguished;
      case tpl::Verdict::Unknown:
        std::cout << "unknown visited=" << v.visited << '\n';
        return kExitUnknown;
    }
  }

  if (lmove->parsed()) {
    tpl::LMoveSpec spec;
    spec.slot = slot;
    spec.strand = strand;
    spec.kind =
        lkind == "over" ? tpl::LMoveKind::Over : tpl::LMoveKind::Under;
    if (lkink == "none") {
      spec.kink = tpl::LMoveKink::None;
    } else if (lkink == "pre") {
      spec.kink = tpl::LMoveKink::PreCrossing;
    } else {
      spec.kink = tpl::LMoveKink::Classical;
      spec.kink_sign = lkink == "+" ? 1 : -1;
    }
    std::cout << tpl::serialize_word(
        tpl::apply_l_move(load_word(path_a), spec));
    return 0;
  }

  if (resolve->parsed()) {
    const std::string text = read_file(path_a);
    tpl::MorseDiagram d;
    if (looks_like_diagram(text)) {
      auto r = tpl::parse_diagram(text);
      if (!r.diagram) throw InputError(path_a + ": " + r.error);
      d = *r.diagram;
    } else {
      auto r = tpl::parse_word(text);
      if (!r.word) throw InputError(path_a + ": " + r.error);
      d = tpl::close_braid(r.word->flavor == tpl::Flavor::TSM
                               ? tpl::map_flavor_mu(*r.word)
                               : *r.word);
    }
    require_cap(count_pre(d), cap);
    const auto all = tpl::all_resolutions(d, cap);
    std::cout << "resolutions=" << all.size() << '\n';
    std::vector<std::string> lines(all.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) {
        std::string signs;
        for (auto ch : all[k].first.choice)
          signs += ch == tpl::EventKind::CrossPos ? '+' : '-';
        if (signs.empty()) signs = ".";
        lines[k] =
            signs + ' ' + linking_text(tpl::linking_vector(all[k].second));
      }
    };
    const std::size_t t =
        std::min<std::size_t>(static_cast<std::size_t>(threads), all.size());
    if (t <= 1) {
      work(0, all.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (all.size() + t - 1) / t;
      for (std::size_t b = 0; b < all.size(); b += chunk)
        pool.emplace_back(work, b, std::min(b + chunk, all.size()));
      for (auto& th : pool) th.join();
    }
    for (const auto& line : lines) std::cout << line << '\n';
    return 0;
  }

  return kExitUsage;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
