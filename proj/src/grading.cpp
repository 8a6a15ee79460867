#include "conequot/grading.hpp"

#include "conequot/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace conequot {

IndexSet IndexSet::from_indices(const std::vector<std::size_t>& indices) {
  std::uint64_t bits = 0;
  for (std::size_t i : indices) {
    if (i >= kMaxSize) throw InputError("generator index out of range for an index set");
    bits |= std::uint64_t{1} << i;
  }
  return IndexSet(bits);
}

IndexSet IndexSet::all(std::size_t r) {
  if (r > kMaxSize) throw InputError("at most 64 generators are supported");
  return IndexSet(r == kMaxSize ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1);
}

std::size_t IndexSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> IndexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxSize; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> IndexSet::one_based() const {
  auto out = indices();
  for (auto& i : out) ++i;
  return out;
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.indices() <=> b.indices();
}

IntMatrix GradingInput::projection() const {
  IntMatrix q(lattice_rank, static_cast<Index>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i) q.col(static_cast<Index>(i)) = generators[i].degree;
  return q;
}

std::vector<IntVector> GradingInput::degrees() const {
  std::vector<IntVector> out;
  for (const auto& g : generators) out.push_back(g.degree);
  return out;
}

std::vector<IntVector> GradingInput::degrees_of(const IndexSet& face) const {
  std::vector<IntVector> out;
  for (std::size_t i : face.indices()) out.push_back(generators.at(i).degree);
  return out;
}

Cone GradingInput::image(const IndexSet& face) const { return cone_from_generators(lattice_rank, degrees_of(face)); }

IndexSet DegreeGroups::saturate(std::uint64_t group_mask) const {
  IndexSet out;
  for (std::size_t g = 0; g < members.size(); ++g)
    if ((group_mask >> g) & 1u) out = out | members[g];
  return out;
}

DegreeGroups group_degrees(const GradingInput& input) {
  DegreeGroups groups;
  for (std::size_t i = 0; i < input.generators.size(); ++i) {
    const auto& d = input.generators[i].degree;
    auto it = std::find_if(groups.degrees.begin(), groups.degrees.end(), [&](const IntVector& x) { return equal(x, d); });
    if (it == groups.degrees.end()) {
      groups.degrees.push_back(d);
      groups.members.push_back(IndexSet().with(i));
    } else {
      auto g = static_cast<std::size_t>(it - groups.degrees.begin());
      groups.members[g] = groups.members[g].with(i);
    }
  }
  return groups;
}

bool ValidationReport::facet_condition_holds() const {
  return std::all_of(facet_ok.begin(), facet_ok.end(), [](bool b) { return b; });
}

ValidationReport validate(const GradingInput& input) {
  const Index k = input.lattice_rank;
  const std::size_t r = input.generators.size();
  if (k < 1) throw InputError("lattice_rank must be at least 1");
  if (r < 1) throw InputError("at least one generator is required");
  if (r > IndexSet::kMaxSize) throw InputError("at most 64 generators are supported");
  for (std::size_t i = 0; i < r; ++i) {
    if (input.generators[i].degree.size() != k) {
      std::ostringstream os;
      os << "generator " << (i + 1) << " (" << input.generators[i].name << ") has a degree of length "
         << input.generators[i].degree.size() << ", expected " << k;
      throw InputError(os.str());
    }
  }
  ValidationReport report;
  report.faithful = generates_full_lattice(input.degrees(), k);
  if (input.mode == FaceMode::explicit_list) {
    if (input.f_faces.empty()) throw InputError("explicit mode requires a nonempty f_faces list");
    const IndexSet full = IndexSet::all(r);
    bool has_full = false, has_empty = false;
    for (const auto& f : input.f_faces) {
      if (!f.is_subset_of(full)) throw InputError("f_faces entry refers to a generator index beyond r");
      has_full = has_full || f == full;
      has_empty = has_empty || f.empty();
    }
    if (!has_full) throw InputError("f_faces must list the full index set");
    if (!has_empty) throw InputError("f_faces must list the empty set");
  } else if (!input.f_faces.empty()) {
    report.warnings.push_back("f_faces is ignored in suitable mode");
  }

  const IndexSet full = IndexSet::all(r);
  for (std::size_t i = 0; i < r; ++i) report.facet_ok.push_back(generates_full_lattice(input.degrees_of(full.without(i)), k));
  return report;
}

ValidationReport validate_faithful(const GradingInput& input) {
  ValidationReport report = validate(input);
  if (!report.faithful)
    throw InputError("the degrees do not generate the lattice Z^" + std::to_string(input.lattice_rank) +
                     " (grading not faithful)");
  return report;
}

std::optional<std::size_t> OrbitConeSet::find(const Cone& c) const {
  auto it = std::lower_bound(cones.begin(), cones.end(), c);
  if (it == cones.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cones.begin());
}

OrbitConeSet orbit_cones(const GradingInput& input, std::size_t max_distinct_degrees) {
  const Index k = input.lattice_rank;
  std::vector<std::pair<IndexSet, Cone>> images;
  if (input.mode == FaceMode::suitable) {
    const DegreeGroups groups = group_degrees(input);
    if (groups.size() > max_distinct_degrees)
      throw CapExceeded("suitable mode enumerates subsets of at most " + std::to_string(max_distinct_degrees) +
                        " distinct degrees; got " + std::to_string(groups.size()));
    const std::uint64_t count = std::uint64_t{1} << groups.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::vector<IntVector> gens;
      for (std::size_t g = 0; g < groups.size(); ++g)
        if ((mask >> g) & 1u) gens.push_back(groups.degrees[g]);
      images.emplace_back(groups.saturate(mask), cone_from_generators(k, gens));
    }
  } else {
    for (const auto& f : input.f_faces) images.emplace_back(f, input.image(f));
  }

  OrbitConeSet out;
  out.rank = k;
  std::map<Cone, IndexSet> first_witness;
  for (const auto& [face, c] : images) first_witness.emplace(c, face);
  for (const auto& [c, w] : first_witness) {
    out.cones.push_back(c);
    out.witness.push_back(w);
  }
  for (const auto& [face, c] : images) out.faces.push_back({face, *out.find(c)});
  std::sort(out.faces.begin(), out.faces.end(), [](const FaceImage& a, const FaceImage& b) { return a.indices < b.indices; });

  const Cone generic = cone_from_generators(k, input.degrees());
  const auto g = out.find(generic);
  if (!g) throw InputError("the full index set must be an F-face");
  out.generic = *g;

  if (input.mode == FaceMode::explicit_list) {
    for (const auto& c : out.cones)
      for (const auto& f : faces(c))
        if (!out.find(f)) {
          out.warnings.push_back("orbit cone set is not closed under faces: " + f.label() + " is a face of " + c.label());
          break;
        }
  }
  return out;
}

bool is_pointed_grading(const GradingInput& input) {
  for (const auto& d : input.degrees())
    if (is_zero(d)) return false;
  return cone_from_generators(input.lattice_rank, input.degrees()).is_pointed();
}

}  // namespace conequot
