#pragma once

// The transfer construction: from a finite set of elements of U(P1), build
// the partial-product closure of their letters and the letters' inverses,
// an isomorphism of that closure into P2, the induced word map theta and
// class map theta~, and check the properties that make theta~ an
// isomorphism onto its image.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stallings/constructions.hpp"
#include "stallings/morphism.hpp"
#include "stallings/ugroup.hpp"

namespace stallings {

// S_0 = s0; S_{r+1} = S_r plus ab for a, b in S_r with (a, b) in D.
ClosureChain product_closure(const Pregroup& p, std::span<const Elem> s0, std::size_t steps);

struct Verdict {
  bool passed = false;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // cases outside the domain of the check
  std::string detail;       // first failure, if any
};

struct TransferReport {
  std::vector<Word> source;  // canonical representatives over P1
  std::size_t J = 0;
  ClosureChain chain;         // S_0 .. S_2J in P1
  ClosureChain target_chain;  // T_0 .. T_2J recomputed in P2 from phi(S_0)
  std::optional<PartialMap> phi;
  std::vector<Word> mapped;  // theta(source[i]), letterwise
  std::vector<Word> images;  // canonical representatives of theta~(source[i])
  Verdict chain_equality;    // phi(S_r) = T_r for every r
  Verdict reducedness;       // D-pairs over S_2J preserved both ways
  Verdict transport;         // u ~ v in P1 iff theta u ~ theta v in P2
  Verdict homomorphism;      // theta~(uv) = theta~(u) theta~(v), inverses, injectivity

  bool ok() const {
    return phi && chain_equality.passed && reducedness.passed && transport.passed && homomorphism.passed;
  }
};

// Throws Error when f is empty or P1 and P2 have different signatures.  A
// missing isomorphism is reported (phi empty), not thrown.
TransferReport transfer(const SPregroup& p1, const SPregroup& p2, const std::vector<Word>& f);

// JSON document with a "verdict" field ("pass" / "fail").
std::string format_transfer_report(const TransferReport& r, const SPregroup& p1, const SPregroup& p2);

struct HarnessOptions {
  std::size_t hypothesis_size = 3;  // subset size for the component comparison
  std::size_t subset_size = 3;      // subsets of P1 that are split and matched
  std::size_t word_sets = 2;        // sampled word sets per subset
  std::size_t words_per_set = 3;
  std::size_t max_word_length = 3;
  std::uint64_t seed = 1;
};

struct HarnessReport {
  ConstructionKind kind = ConstructionKind::free;
  bool hypothesis = false;
  std::string hypothesis_detail;
  std::size_t subsets = 0;
  std::size_t partners = 0;  // subsets whose componentwise partner is an isomorphic image
  std::size_t transfers = 0;
  std::size_t transfers_passed = 0;
  std::size_t oracle_checks = 0;
  std::vector<std::string> failures;  // first few, for the report

  bool ok() const { return hypothesis && failures.empty() && partners == subsets && transfers == transfers_passed; }
};

// Checks the component hypothesis (bounded finite-subset equivalence in
// the group language with the designated constants), matches every small
// subset of P1 componentwise into P2, and runs transfer on random words
// over each subset.  Both constructions must be of the same kind.
HarnessReport application_harness(const Construction& side1, const Construction& side2,
                                  const HarnessOptions& options = {});

std::string format_harness_report(const HarnessReport& r);

}  // namespace stallings
