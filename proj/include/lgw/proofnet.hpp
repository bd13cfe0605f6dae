#pragma once

// Proof structures read off cut-free derivations, and their genus.
//
// Vertices are formula occurrences at the granularity the derivation
// exhibits: an axiom contributes one vertex shared by both of its sides, each
// monotonicity or rewrite step a fresh vertex for the formula it builds.
// Links:
//   - every monotonicity step yields a tensor link over the two argument
//     occurrences it consumes and the occurrence it creates;
//   - every rewrite step yields a cotensor link the same way;
//   - every structural node of the end-sequent yields a link over its child
//     and parent entities, tensor when solid and purely tensor when pure,
//     except that a node whose three neighbours are plain vertices matching
//     the ports of an existing tensor link is identified with that link (the
//     node's dot then decides whether the link stays tensor or becomes purely
//     tensor; the opposite retyping never happens).
// A turnstile edge joins the two root entities unless the identification
// above absorbed it.  Each link carries a fixed counterclockwise rotation of
// its three ports, a function of (kind, family, main position) only; the
// genus of the resulting combinatorial map is the planarity measure, and the
// boundary closure is exactly the punctuation tree plus the turnstile edge.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgw/derivation.hpp"
#include "lgw/rules.hpp"

namespace lgw {

enum class LinkType : uint8_t { Tensor, Cotensor, PureTensor };

const char* link_type_name(LinkType t);  // "tensor", "cotensor", "pure_tensor"

// Entity ids: vertices occupy [0, vertices.size()), link i is
// vertices.size() + i.
struct Link {
  LinkType type = LinkType::Tensor;
  Conn family = Conn::Prod;
  // Logical links: {arg1, arg2, main}, all vertices.  Punctuation links:
  // {child0, child1, parent}; the parent port of a root faces the turnstile.
  std::array<int, 3> ports{};
  std::array<int, 3> ccw{};  // slot order, counterclockwise
  bool from_punctuation = false;
  bool merged = false;  // absorbed the end-sequent's structural node
};

struct ProofStructure {
  Sequent end;
  std::vector<FormulaPtr> vertices;
  std::vector<Link> links;
  std::vector<int> hypotheses;   // antecedent leaf vertices, left to right
  std::vector<int> conclusions;  // succedent leaf vertices, left to right
  // Edge between the two root entities; absent when a merge absorbed it.
  std::optional<std::pair<int, int>> turnstile;
  int merged = 0;  // structural nodes identified with logical links
};

// Builds the proof structure of a cut-free derivation.  Validates every node
// shape on the way; throws std::invalid_argument on Cut or malformed trees.
ProofStructure to_proof_structure(const Derivation& d);

// Oriented surface map: rotation lists each map node's darts counter-
// clockwise; involution pairs the two darts of each edge.
struct CombinatorialMap {
  std::vector<std::vector<int>> rotation;
  std::vector<int> involution;
};

// Map nodes are the structure's entities (vertices then links).
CombinatorialMap to_map(const ProofStructure& ps);

// Sum of per-component genus via Euler's formula, faces traced through
// rotation-next of the paired dart.  Throws std::invalid_argument when the
// rotation is not a partition of the darts or the involution is not a
// fixed-point-free pairing.
int map_genus(const CombinatorialMap& m);

int genus(const ProofStructure& ps);
bool check_planarity(const ProofStructure& ps);  // genus == 0
// Independent crossing pairs forced by any drawing; debug statistic.
int crossing_pairs(const ProofStructure& ps);

std::string to_dot(const ProofStructure& ps);

// Canonical description (axiom identifications addressed from the end-sequent
// leaves, links by kind/family/port addresses); equal iff isomorphic as
// decorated structures over the same end-sequent.
std::string net_signature(const ProofStructure& ps);

struct NetSearchLimits {
  uint64_t max_work = 5'000'000;  // derivation nodes materialized
  uint64_t max_states = 500'000;  // distinct (sequent, wiring) search states
  size_t max_nets = 20'000;
  double max_seconds = 120.0;
};

struct NetSearchResult {
  std::vector<ProofStructure> nets;  // signature-distinct
  bool exhausted = false;            // true when enumeration completed
  uint64_t derivations = 0;          // complete derivations considered
  std::string limit_name;            // first limit hit when !exhausted
};

// Enumerates the proof structures of all cut-free derivations of the goal
// (distinct sequents on every branch path are guaranteed by stratification:
// logical steps consume a connective, structural steps are quotiented by
// their leaf wiring).  `stop` may cut the search short after a net is found,
// e.g. once a planar one appears; the result is then marked not exhausted.
NetSearchResult all_structures(const Sequent& goal, const Logic& logic,
                               const NetSearchLimits& limits = {},
                               const std::function<bool(const ProofStructure&)>& stop = nullptr);

}  // namespace lgw
