#pragma once

// Input data model: generator degrees u_i = Q(e_i) in K = Z^k together with the
// F-face structure, and the orbit cones they produce.

#include "conequot/cone.hpp"
#include "conequot/errors.hpp"
#include "conequot/scalar.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conequot {

/// A subset of the generator indices {0, ..., r-1}; at most 64 generators.
class IndexSet {
 public:
  static constexpr std::size_t kMaxSize = 64;

  IndexSet() = default;
  static IndexSet from_bits(std::uint64_t bits) { return IndexSet(bits); }
  static IndexSet from_indices(const std::vector<std::size_t>& indices);
  static IndexSet all(std::size_t r);

  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool is_subset_of(const IndexSet& other) const { return (bits_ & ~other.bits_) == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<std::size_t> indices() const;
  /// 1-based, as written in input documents.
  std::vector<std::size_t> one_based() const;

  IndexSet with(std::size_t i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }
  IndexSet operator|(const IndexSet& o) const { return IndexSet(bits_ | o.bits_); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  /// Smaller sets first, then by sorted index list.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

 private:
  explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

enum class FaceMode { suitable, explicit_list };

struct Generator {
  std::string name;
  IntVector degree;
};

struct GradingInput {
  Index lattice_rank = 0;
  std::vector<Generator> generators;
  FaceMode mode = FaceMode::suitable;
  std::vector<IndexSet> f_faces;  // explicit mode only

  std::size_t generator_count() const { return generators.size(); }
  /// The k x r matrix Q whose columns are the degrees.
  IntMatrix projection() const;
  std::vector<IntVector> degrees() const;
  std::vector<IntVector> degrees_of(const IndexSet& face) const;
  Cone image(const IndexSet& face) const;
};

/// Generators grouped by equal degree, in order of first appearance.
struct DegreeGroups {
  std::vector<IntVector> degrees;
  std::vector<IndexSet> members;

  std::size_t size() const { return degrees.size(); }
  /// Union of the member sets of the groups selected by `group_mask`.
  IndexSet saturate(std::uint64_t group_mask) const;
};

DegreeGroups group_degrees(const GradingInput& input);

struct ValidationReport {
  /// The degrees generate K.
  bool faithful = false;
  /// facet_ok[i]: the degrees other than u_i generate K.
  std::vector<bool> facet_ok;
  std::vector<std::string> warnings;

  bool facet_condition_holds() const;
};

/// Checks structure and (explicit mode) the F-face list, throwing InputError on violations.
/// Faithfulness and the facet condition (per dropped index) are reported, not thrown.
ValidationReport validate(const GradingInput& input);

/// validate(), additionally throwing InputError when the grading is not faithful.
ValidationReport validate_faithful(const GradingInput& input);

/// An F-face and the orbit cone it projects onto. In suitable mode each entry stands for
/// every index set with the same degree support; `indices` is the saturated representative.
struct FaceImage {
  IndexSet indices;
  std::size_t cone = 0;
};

struct OrbitConeSet {
  Index rank = 0;
  std::vector<Cone> cones;  // canonical order
  std::size_t generic = 0;  // position of the weight cone
  std::vector<IndexSet> witness;
  std::vector<FaceImage> faces;
  std::vector<std::string> warnings;

  const Cone& generic_cone() const { return cones[generic]; }
  std::size_t size() const { return cones.size(); }
  std::optional<std::size_t> find(const Cone& c) const;
};

inline constexpr std::size_t kMaxDistinctDegrees = 24;

OrbitConeSet orbit_cones(const GradingInput& input, std::size_t max_distinct_degrees = kMaxDistinctDegrees);

/// The weight cone is pointed and no degree is zero.
bool is_pointed_grading(const GradingInput& input);

}  // namespace conequot
