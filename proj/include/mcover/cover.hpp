#pragma once

#include <optional>
#include <vector>

#include "mcover/errors.hpp"
#include "mcover/graph.hpp"

namespace mcover {

// k matchings whose union covers `covered`.
struct MatchingDecomposition {
  int k = 0;
  std::vector<std::vector<Edge>> matchings;  // exactly k entries
  VertexSet covered;
};

// Stable set S with |S| > k * |N(S)|: proof that no k matchings of the host
// graph can cover all of S.
struct StableSetCertificate {
  VertexSet s;
  VertexSet n_of_s;
  int k = 0;
};

// Raised by minimum-k searches: a vertex with no incident edge cannot be
// covered by any number of matchings. Carries the one-vertex witness.
struct IsolatedVertexError : std::runtime_error {
  int vertex;
  explicit IsolatedVertexError(int v)
      : std::runtime_error("vertex " + std::to_string(v) +
                           " is isolated; no matching covers it"),
        vertex(v) {}
};

// Working state of the augmenting search. `f` is kept as a membership mask
// over edge ids. Vertices split by current f-degree: degree >= 2 ("inner"),
// degree <= 1 ("outer"), and the uncovered targets among the outer ones.
struct CoverState {
  const Graph* g = nullptr;
  int k = 0;
  VertexSet u;                 // coverage targets
  std::vector<char> target;    // indicator of u by vertex id
  std::vector<char> in_f;      // indicator by edge id
  std::vector<int> deg_f;
  int augmentations = 0;

  std::vector<int> f_edge_ids() const;
  VertexSet a_set() const;       // deg_f >= 2
  VertexSet b_set() const;       // deg_f <= 1
  VertexSet b_prime() const;     // uncovered targets
  bool is_minimal() const;       // no f-edge joins two inner vertices
};

CoverState make_cover_state(const Graph& g, int k, const VertexSet& u,
                            const std::vector<Edge>& initial_f);

// Deletes f-edges whose endpoints both have f-degree >= 2, scanning edges in
// id order until none remains. Covered vertices are unchanged.
void minimalize(CoverState& state);

struct CertifiedSets {
  VertexSet s;        // stable, uncoverable targets plus their outer company
  VertexSet a_prime;  // exactly the neighborhood of s
};

// One round of the alternating search from every uncovered target. Either
// applies an interchange that strictly increases the number of covered
// targets (returns nullopt, state updated) or proves none exists and returns
// the certifying pair. Requires a minimalized state with b_prime nonempty.
std::optional<CertifiedSets> augment_or_certify(CoverState& state);

// Splits f (every f-degree <= k) into k matchings covering exactly the
// endpoints of a star forest obtained by the deletion loop above. Edges of
// each star go to matchings 0..deg-1 in neighbor-id order.
MatchingDecomposition star_decompose(const Graph& g,
                                     const std::vector<Edge>& f, int k);

struct SolveResult {
  MatchingDecomposition decomposition;
  VertexSet uncovered;                              // targets left uncovered
  std::optional<StableSetCertificate> witness;      // present iff uncovered
  int augmentations = 0;
};

// Decides whether k matchings can cover every vertex of u; k >= 2. Covers the
// maximum possible number of targets; when some are left, the witness is a
// stable set S with |S| - k*|N(S)| equal to the number left uncovered.
SolveResult solve(const Graph& g, int k, const VertexSet& u);

struct MinKResult {
  int k_min = 0;
  MatchingDecomposition decomposition;
  // Certifies that k_min - 1 matchings cannot cover the graph; absent only
  // when no stable set forces the bound (then k_min <= 2 and the decision
  // rests on maximum-matching size).
  std::optional<StableSetCertificate> lower_bound_witness;
  std::vector<int> augmentations_per_k;
};

// Smallest k such that k matchings cover every vertex, searching k = 2, 3,...
// and reusing the previous union as the starting point. With distinguish_k1
// set, a maximum-matching run separates answers 1 and 2. Throws
// IsolatedVertexError if some vertex has no incident edge.
MinKResult min_k(const Graph& g, bool distinguish_k1);

// True iff d.matchings are k pairwise-edge-compatible matchings of g whose
// union covers every vertex of u. Foreign edges raise ContractError.
bool verify_cover(const Graph& g, const MatchingDecomposition& d,
                  const VertexSet& u);

// True iff c.s is nonempty, stable, within u when given, c.n_of_s is exactly
// its neighborhood, and |S| > k * |N(S)|.
bool verify_certificate(const Graph& g, const StableSetCertificate& c,
                        const std::optional<VertexSet>& u = std::nullopt);

}  // namespace mcover
