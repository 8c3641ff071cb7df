#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hvn/character.hpp"
#include "hvn/dynsys.hpp"
#include "hvn/group.hpp"
#include "hvn/measure.hpp"
#include "hvn/rational.hpp"
#include "hvn/topsystem.hpp"
#include "json.hpp"

namespace hvn {

using ordered_json = nlohmann::ordered_json;

// Group sources accepted everywhere a group reference appears: a file path
// (Cayley or permutation format) or an inline id. Inline ids:
//   cyclic:n  symmetric:n  dihedral:n  quaternion:n  gl32
//   product:<id>;<id>
// quaternion:n is the dicyclic group of order 4n (n=2 gives Q8).
bool is_inline_group_id(const std::string& s);

struct LoadedGroup {
  GroupPtr group;
  // Present when the source was a permutation file; action files over such
  // groups list one image line per generator.
  std::optional<PermutationRealization> realization;
  std::string id;  // what the user wrote, for reports
};

LoadedGroup group_from_inline(const std::string& id);

// Cayley format: line 1 = n, then n rows of n indices. The identity is
// moved to index 0 during ingest. Permutation format: line 1 = degree,
// then one generator per line as the image list of 0..degree-1. Format is
// chosen by extension (.cayley / .perm) or, failing that, by whether the
// row count matches the declared order.
LoadedGroup load_group_file(const std::filesystem::path& path);

// Resolves either an inline id or a path (relative paths against base_dir).
LoadedGroup load_group(const std::string& source, const std::filesystem::path& base_dir);

// Action format: header "group <path-or-inline-id> points <k>", then one
// line of images of 0..k-1 per group generator (permutation-file groups)
// or per group element (everything else; element order is the post-ingest
// Cayley order, identity first). A measure file appends one line
// "weights p1/q1 ... pk/qk".
struct LoadedAction {
  LoadedGroup group;
  TopSystem system;
  std::optional<std::vector<Rational>> weights;
};

LoadedAction load_action_file(const std::filesystem::path& path);

Rational parse_rational(const std::string& token);

std::string hash_hex(std::uint64_t h);

// Canonical character-table export; every field is exact, so the bytes are
// stable across runs. Rows are lists of integer coefficient vectors over
// the power basis of the root of unity of order root_order.
ordered_json chartable_json(const CharacterTable& t);

// Spectrum export: (irrep, degree, multiplicity) triples for the support,
// plus the table hash tying the indices to a concrete table.
ordered_json spectrum_json(const PointSpectrum& ps);

// Grouplike subsets travel as sorted index lists plus the table hash.
ordered_json grouplike_json(const CharacterTable& t, const std::vector<int>& members);

}  // namespace hvn
