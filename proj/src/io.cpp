#include "conequot/io.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace conequot {

namespace {

// ---- parsing ----

class Parser {
 public:
  explicit Parser(bool strict) : strict_(strict) {}

  void error(const std::string& where, const std::string& what) { errors_.push_back(where + ": " + what); }

  void check_fields(const Json& obj, const std::string& where, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
      const bool ok = std::any_of(known.begin(), known.end(), [&](const char* k) { return key == k; });
      if (ok) continue;
      const std::string msg = "unknown field \"" + key + "\"";
      if (strict_)
        error(where, msg);
      else
        warnings_.push_back((where.empty() ? "/" : where) + ": " + msg + " ignored");
    }
  }

  std::optional<BigInt> integer(const Json& v, const std::string& where) {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned()) return BigInt(v.get<unsigned long long>());
      return BigInt(v.get<long long>());
    }
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                     [](char ch) { return ch >= '0' && ch <= '9'; });
      if (digits && s != "-") return BigInt(s);
    }
    error(where, "expected an integer");
    return std::nullopt;
  }

  std::optional<IntVector> vector(const Json& v, const std::string& where, Index expected_length) {
    if (!v.is_array()) {
      error(where, "expected an array of integers");
      return std::nullopt;
    }
    IntVector out(static_cast<Index>(v.size()));
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto x = integer(v[i], where + "/" + std::to_string(i));
      if (x)
        out[static_cast<Index>(i)] = *x;
      else
        ok = false;
    }
    if (ok && expected_length >= 0 && out.size() != expected_length) {
      error(where, "has length " + std::to_string(out.size()) + ", expected lattice_rank = " +
                       std::to_string(expected_length));
      return std::nullopt;
    }
    return ok ? std::optional<IntVector>(out) : std::nullopt;
  }

  std::vector<std::string> errors_;
  std::vector<std::string> warnings_;

 private:
  bool strict_;
};

Json integer_to_json(const BigInt& x) {
  if (x >= BigInt(std::numeric_limits<long long>::min()) && x <= BigInt(std::numeric_limits<long long>::max()))
    return Json(x.convert_to<long long>());
  return Json(x.str());
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(integer_to_json(v[i]));
  return out;
}

Json vectors_to_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Json index_set_to_json(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t i : s.one_based()) out.push_back(i);
  return out;
}

}  // namespace

ParseResult parse_input(std::string_view text, bool strict) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  Parser p(strict);
  ParseResult result;
  InputDocument& doc = result.document;
  if (!root.is_object()) throw InputError("/: the document must be a JSON object");
  p.check_fields(root, "", {"schema_version", "lattice_rank", "generators", "mode", "f_faces", "bunches", "metadata"});

  if (root.contains("schema_version")) {
    const Json& v = root["schema_version"];
    if (!v.is_string())
      p.error("/schema_version", "expected a string");
    else if (v.get<std::string>() != kSchemaVersion)
      p.error("/schema_version", "unsupported version \"" + v.get<std::string>() + "\" (expected \"" +
                                     kSchemaVersion + "\")");
  }

  Index k = -1;
  if (!root.contains("lattice_rank")) {
    p.error("/lattice_rank", "missing required field");
  } else if (!root["lattice_rank"].is_number_integer()) {
    p.error("/lattice_rank", "expected a positive integer");
  } else {
    const auto v = root["lattice_rank"].get<long long>();
    if (v < 1)
      p.error("/lattice_rank", "must be at least 1");
    else
      k = static_cast<Index>(v);
  }
  doc.grading.lattice_rank = std::max<Index>(k, 0);

  if (!root.contains("generators")) {
    p.error("/generators", "missing required field");
  } else if (!root["generators"].is_array() || root["generators"].empty()) {
    p.error("/generators", "expected a nonempty array");
  } else {
    const Json& gens = root["generators"];
    if (gens.size() > IndexSet::kMaxSize) p.error("/generators", "at most 64 generators are supported");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string where = "/generators/" + std::to_string(i);
      const Json& g = gens[i];
      if (!g.is_object()) {
        p.error(where, "expected an object with \"name\" and \"degree\"");
        continue;
      }
      p.check_fields(g, where, {"name", "degree"});
      Generator gen;
      if (!g.contains("name"))
        gen.name = "T" + std::to_string(i + 1);
      else if (!g["name"].is_string())
        p.error(where + "/name", "expected a string");
      else
        gen.name = g["name"].get<std::string>();
      if (!g.contains("degree")) {
        p.error(where + "/degree", "missing required field");
      } else if (auto d = p.vector(g["degree"], where + "/degree", k)) {
        gen.degree = *d;
      }
      doc.grading.generators.push_back(std::move(gen));
    }
  }
  const std::size_t r = doc.grading.generators.size();

  if (root.contains("mode")) {
    const Json& m = root["mode"];
    if (m == "suitable")
      doc.grading.mode = FaceMode::suitable;
    else if (m == "explicit")
      doc.grading.mode = FaceMode::explicit_list;
    else
      p.error("/mode", "expected \"suitable\" or \"explicit\"");
  }

  if (root.contains("f_faces")) {
    const Json& ff = root["f_faces"];
    if (!ff.is_array()) {
      p.error("/f_faces", "expected an array of index lists");
    } else {
      for (std::size_t i = 0; i < ff.size(); ++i) {
        const std::string where = "/f_faces/" + std::to_string(i);
        if (!ff[i].is_array()) {
          p.error(where, "expected an array of 1-based generator indices");
          continue;
        }
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < ff[i].size(); ++j) {
          const Json& x = ff[i][j];
          const std::string wj = where + "/" + std::to_string(j);
          if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > static_cast<long long>(r))
            p.error(wj, "expected a generator index between 1 and " + std::to_string(r));
          else
            idx.push_back(static_cast<std::size_t>(x.get<long long>() - 1));
        }
        if (std::all_of(idx.begin(), idx.end(), [](std::size_t v) { return v < IndexSet::kMaxSize; }))
          doc.grading.f_faces.push_back(IndexSet::from_indices(idx));
      }
    }
  } else if (doc.grading.mode == FaceMode::explicit_list) {
    p.error("/f_faces", "required in explicit mode");
  }

  if (root.contains("bunches")) {
    const Json& bs = root["bunches"];
    if (!bs.is_array()) {
      p.error("/bunches", "expected an array");
    } else {
      for (std::size_t i = 0; i < bs.size(); ++i) {
        const std::string where = "/bunches/" + std::to_string(i);
        const Json& b = bs[i];
        if (!b.is_object() || !b.contains("cones") || !b["cones"].is_array()) {
          p.error(where, "expected an object with a \"cones\" array");
          continue;
        }
        p.check_fields(b, where, {"name", "cones"});
        NamedBunch nb;
        nb.name = b.contains("name") && b["name"].is_string() ? b["name"].get<std::string>() : "bunch" + std::to_string(i + 1);
        for (std::size_t c = 0; c < b["cones"].size(); ++c) {
          const std::string wc = where + "/cones/" + std::to_string(c);
          const Json& gens = b["cones"][c];
          if (!gens.is_array()) {
            p.error(wc, "expected an array of generator vectors");
            continue;
          }
          std::vector<IntVector> cone;
          for (std::size_t g = 0; g < gens.size(); ++g)
            if (auto v = p.vector(gens[g], wc + "/" + std::to_string(g), k)) cone.push_back(*v);
          nb.cones.push_back(std::move(cone));
        }
        doc.bunches.push_back(std::move(nb));
      }
    }
  }

  if (root.contains("metadata")) {
    if (!root["metadata"].is_object())
      p.error("/metadata", "expected an object");
    else
      doc.metadata = root["metadata"];
  }

  if (!p.errors_.empty()) {
    std::string msg;
    for (const auto& e : p.errors_) msg += (msg.empty() ? "" : "\n") + e;
    throw InputError(msg);
  }
  validate(doc.grading);
  result.warnings = std::move(p.warnings_);
  return result;
}

Json input_to_json(const InputDocument& doc) {
  Json out;
  out["schema_version"] = doc.schema_version;
  out["lattice_rank"] = doc.grading.lattice_rank;
  Json gens = Json::array();
  for (const auto& g : doc.grading.generators) {
    Json j;
    j["name"] = g.name;
    j["degree"] = vector_to_json(g.degree);
    gens.push_back(j);
  }
  out["generators"] = gens;
  out["mode"] = doc.grading.mode == FaceMode::suitable ? "suitable" : "explicit";
  if (doc.grading.mode == FaceMode::explicit_list || !doc.grading.f_faces.empty()) {
    Json ff = Json::array();
    for (const auto& f : doc.grading.f_faces) ff.push_back(index_set_to_json(f));
    out["f_faces"] = ff;
  }
  if (!doc.bunches.empty()) {
    Json bs = Json::array();
    for (const auto& b : doc.bunches) {
      Json j;
      j["name"] = b.name;
      Json cones = Json::array();
      for (const auto& c : b.cones) cones.push_back(vectors_to_json(c));
      j["cones"] = cones;
      bs.push_back(j);
    }
    out["bunches"] = bs;
  }
  if (!doc.metadata.empty()) out["metadata"] = doc.metadata;
  return out;
}

// ---- pipeline ----

std::string collection_name(std::size_t i) { return "X" + std::to_string(i); }

Classification classify(const InputDocument& doc, const PipelineOptions& opts) {
  Classification c;
  c.input = doc;
  const GradingInput& in = doc.grading;
  c.validation = validate_faithful(in);
  c.warnings = c.validation.warnings;
  if (!c.validation.facet_condition_holds()) {
    std::string failing;
    for (std::size_t i = 0; i < c.validation.facet_ok.size(); ++i)
      if (!c.validation.facet_ok[i]) failing += (failing.empty() ? "" : ", ") + std::to_string(i + 1);
    c.warnings.push_back("facet condition fails when dropping generator(s) " + failing);
  }

  c.omega = orbit_cones(in);
  c.warnings.insert(c.warnings.end(), c.omega.warnings.begin(), c.omega.warnings.end());
  c.fan = git_fan(c.omega);
  c.collections = two_maximal_collections(c.omega, opts.max_omega);

  const auto psis = psi_table(c.fan, c.omega);
  const bool pointed = is_pointed_grading(in);
  for (auto& col : c.collections) {
    const auto v = is_quasiprojective(col, c.fan, psis, pointed);
    col.quasiprojective = v.quasiprojective;
    col.projective = v.projective;
    col.git_witness = v.witness;
  }

  std::vector<Collection> interior;
  for (std::size_t i = 0; i < c.collections.size(); ++i)
    if (c.collections[i].interior) {
      c.interior.push_back(i);
      interior.push_back(c.collections[i]);
    }
  c.poset = morphism_poset(interior, c.omega);

  if (opts.with_geometry)
    for (std::size_t i : c.interior) c.geometry.push_back(geometry_report(in, c.omega, c.fan, psis, c.collections[i], i));

  for (const auto& nb : doc.bunches) {
    BunchStudy s;
    s.name = nb.name;
    std::vector<Cone> cones;
    for (const auto& gens : nb.cones) cones.push_back(cone_from_generators(in.lattice_rank, gens));
    s.bunch = make_bunch(cones);
    s.check = check_bunch(s.bunch, in, c.omega);
    try {
      const Collection col = collection_from_bunch(s.bunch, c.omega);
      auto it = std::find(c.collections.begin(), c.collections.end(), col);
      if (it == c.collections.end()) throw InternalError("2-maximal collection from bunch " + nb.name + " not enumerated");
      s.collection = static_cast<std::size_t>(it - c.collections.begin());
      if (opts.with_geometry && it->interior) s.geometry = geometry_report(in, c.omega, c.fan, psis, *it, *s.collection);
    } catch (const InputError& e) {
      s.error = e.what();
    }
    c.bunch_studies.push_back(std::move(s));
  }
  return c;
}

// ---- JSON rendering ----

Json cone_to_json(const Cone& c) {
  Json out;
  out["label"] = c.label();
  out["dim"] = c.dim();
  out["rays"] = vectors_to_json(c.rays());
  out["lineality"] = vectors_to_json(c.lineality());
  out["facets"] = vectors_to_json(c.facet_normals());
  out["equations"] = vectors_to_json(c.span_equations());
  return out;
}

Json validation_to_json(const InputDocument& doc, const ValidationReport& v) {
  Json out;
  out["lattice_rank"] = doc.grading.lattice_rank;
  out["generators"] = doc.grading.generator_count();
  out["faithful"] = v.faithful;
  out["facet_condition"] = v.facet_condition_holds();
  Json failing = Json::array();
  for (std::size_t i = 0; i < v.facet_ok.size(); ++i)
    if (!v.facet_ok[i]) failing.push_back(i + 1);
  out["facet_failures"] = failing;
  out["pointed"] = is_pointed_grading(doc.grading);
  out["warnings"] = v.warnings;
  return out;
}

Json orbit_cones_to_json(const OrbitConeSet& omega) {
  Json out;
  out["count"] = omega.size();
  out["generic"] = omega.generic;
  Json cones = Json::array();
  for (std::size_t i = 0; i < omega.size(); ++i) {
    Json j;
    j["index"] = i;
    j.update(cone_to_json(omega.cones[i]));
    j["witness"] = index_set_to_json(omega.witness[i]);
    cones.push_back(j);
  }
  out["cones"] = cones;
  return out;
}

Json git_fan_to_json(const GitFan& fan) {
  Json out;
  out["count"] = fan.cones.size();
  Json cones = Json::array();
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    Json j;
    j["index"] = i;
    j.update(cone_to_json(fan.cones[i]));
    j["chamber"] = static_cast<bool>(fan.chamber[i]);
    j["interior"] = static_cast<bool>(fan.interior[i]);
    cones.push_back(j);
  }
  out["cones"] = cones;
  return out;
}

namespace {

Json labels_of(const std::vector<Cone>& cones) {
  Json out = Json::array();
  for (const auto& c : cones) out.push_back(c.label());
  return out;
}

Json collection_to_json(const Collection& col, std::size_t i, const OrbitConeSet& omega) {
  Json j;
  j["index"] = i;
  if (col.interior) j["variety"] = collection_name(i);
  j["members"] = col.members;
  Json labels = Json::array();
  for (std::size_t m : col.members) labels.push_back(omega.cones[m].label());
  j["member_labels"] = labels;
  j["two_connected"] = col.two_connected;
  j["two_maximal"] = col.two_maximal;
  j["interior"] = col.interior;
  j["quasiprojective"] = col.quasiprojective;
  j["projective"] = col.projective;
  j["git_witness"] = col.git_witness ? Json(col.git_witness->label()) : Json(nullptr);
  return j;
}

Json faces_to_json(const GradingInput& in, const std::vector<IndexSet>& faces) {
  Json out = Json::array();
  const DegreeGroups groups = group_degrees(in);
  for (const auto& f : faces) {
    Json j;
    j["generators"] = index_set_to_json(f);
    if (in.mode == FaceMode::suitable) {
      std::vector<IntVector> ds;
      for (std::size_t g = 0; g < groups.size(); ++g)
        if (groups.members[g].bits() & f.bits()) ds.push_back(groups.degrees[g]);
      j["degrees"] = vectors_to_json(ds);
    }
    out.push_back(j);
  }
  return out;
}

std::size_t expanded_count(const GradingInput& in, const std::vector<IndexSet>& classes) {
  if (in.mode == FaceMode::explicit_list) return classes.size();
  const DegreeGroups groups = group_degrees(in);
  std::size_t total = 0;
  for (const auto& f : classes) {
    std::size_t n = 1;
    for (const auto& m : groups.members)
      if (m.bits() & f.bits()) n *= m.size();
    total += n;
  }
  return total;
}

std::string index_string(const std::optional<BigInt>& idx) { return idx ? idx->str() : "infinite"; }

Json geometry_to_json(const GeometryReport& g, const GradingInput& in) {
  Json j;
  j["variety"] = collection_name(g.collection_id);
  j["collection"] = g.collection_id;
  j["bunch"] = labels_of(g.bunch.members);
  j["locally_factorial"] = g.locally_factorial;
  j["q_factorial"] = g.q_factorial;
  if (g.smooth_toric_mode) {
    Json s;
    s["value"] = *g.smooth_toric_mode;
    s["criterion"] = "toric criterion";
    j["smooth_toric_mode"] = s;
  }
  j["class_group_rank"] = g.class_group_rank;
  Json pic;
  pic["basis"] = vectors_to_json(g.picard.basis_vectors());
  pic["rank"] = g.picard.rank();
  pic["index"] = index_string(g.picard_index);
  j["picard"] = pic;
  j["semiample"] = cone_to_json(g.ample.semiample);
  Json ample;
  ample["nonempty"] = g.ample.ample_nonempty;
  ample["sample"] = g.ample.ample_sample ? vector_to_json(*g.ample.ample_sample) : Json(nullptr);
  j["ample"] = ample;
  j["quasiprojective"] = g.quasiprojective;
  j["projective"] = g.projective;
  j["git_witness"] = g.git_witness ? Json(g.git_witness->label()) : Json(nullptr);
  j["face_representation"] = in.mode == FaceMode::suitable ? "degree classes" : "index sets";
  j["relevant_faces"] = faces_to_json(in, g.relevant);
  j["covering_faces"] = faces_to_json(in, g.covering);
  j["covering_index_sets"] = expanded_count(in, g.covering);
  return j;
}

std::vector<std::string> interior_names(const Classification& c) {
  std::vector<std::string> names;
  for (std::size_t i : c.interior) names.push_back(collection_name(i));
  return names;
}

Json morphisms_to_json(const Classification& c) {
  const auto names = interior_names(c);
  Json out;
  out["nodes"] = names;
  Json face = Json::array();
  for (const auto& [i, j] : c.poset.arrows)
    if (i != j) face.push_back(Json::array({names[i], names[j]}));
  out["face_relation"] = face;
  Json maps = Json::array();
  for (const auto& [i, j] : c.poset.hasse()) {
    Json m;
    m["from"] = names[j];
    m["to"] = names[i];
    maps.push_back(m);
  }
  out["morphisms"] = maps;
  return out;
}

Json bunch_study_to_json(const BunchStudy& s, const Classification& c) {
  Json j;
  j["name"] = s.name;
  j["cones"] = labels_of(s.bunch.members);
  j["valid"] = s.check.ok();
  j["problems"] = s.check.problems;
  if (s.collection) {
    const Collection& col = c.collections[*s.collection];
    j["collection"] = *s.collection;
    j["interior"] = col.interior;
    j["quasiprojective"] = col.quasiprojective;
    j["projective"] = col.projective;
  } else {
    j["collection"] = nullptr;
  }
  j["geometry"] = s.geometry ? geometry_to_json(*s.geometry, c.input.grading) : Json(nullptr);
  if (!s.error.empty()) j["error"] = s.error;
  return j;
}

}  // namespace

Json collections_to_json(const Classification& c) {
  Json out;
  out["count"] = c.collections.size();
  out["interior_count"] = c.interior.size();
  Json cols = Json::array();
  for (std::size_t i = 0; i < c.collections.size(); ++i) cols.push_back(collection_to_json(c.collections[i], i, c.omega));
  out["collections"] = cols;
  out["morphisms"] = morphisms_to_json(c);
  return out;
}

Json classification_to_json(const Classification& c) {
  Json out;
  out["input"] = input_to_json(c.input);
  out["validation"] = validation_to_json(c.input, c.validation);
  out["orbit_cones"] = orbit_cones_to_json(c.omega);
  out["git_fan"] = git_fan_to_json(c.fan);
  out["collections"] = collections_to_json(c);
  Json emb = Json::array();
  for (const auto& g : c.geometry) emb.push_back(geometry_to_json(g, c.input.grading));
  out["embeddings"] = emb;
  Json studies = Json::array();
  for (const auto& s : c.bunch_studies) studies.push_back(bunch_study_to_json(s, c));
  out["bunches"] = studies;
  out["warnings"] = c.warnings;
  return out;
}

// ---- formatting ----

namespace {

bool has_object(const Json& j) {
  if (j.is_object()) return true;
  if (j.is_array())
    for (const auto& x : j)
      if (has_object(x)) return true;
  return false;
}

std::string inline_json(const Json& j) {
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_json(j[i]);
  return out + "]";
}

void format_into(std::string& out, const Json& j, int indent) {
  constexpr std::size_t kInlineWidth = 100;
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_array() && !j.empty()) {
    if (!has_object(j)) {
      const std::string flat = inline_json(j);
      if (flat.size() <= kInlineWidth) {
        out += flat;
        return;
      }
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      format_into(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      format_into(out, value, indent + 2);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string format_json(const Json& j) {
  std::string out;
  format_into(out, j, 0);
  return out + "\n";
}

// ---- text rendering ----

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line = " ";
    for (std::size_t i = 0; i < row.size(); ++i)
      line += " " + row[i] + (i + 1 < row.size() ? std::string(width[i] - row[i].size() + 1, ' ') : "");
    os << line << "\n";
  }
  return os.str();
}

std::string join_labels(const Bunch& b) {
  std::vector<std::string> parts;
  for (const auto& c : b.members) parts.push_back(c.label());
  return "{" + join(parts, ", ") + "}";
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (std::size_t i : v) parts.push_back(std::to_string(i));
  return join(parts, ",");
}

}  // namespace

std::string validation_to_text(const InputDocument& doc, const ValidationReport& v) {
  std::ostringstream os;
  os << "lattice rank     " << doc.grading.lattice_rank << "\n";
  os << "generators       " << doc.grading.generator_count() << "\n";
  os << "faithful         " << yes_no(v.faithful) << "\n";
  os << "facet condition  " << yes_no(v.facet_condition_holds());
  std::vector<std::size_t> failing;
  for (std::size_t i = 0; i < v.facet_ok.size(); ++i)
    if (!v.facet_ok[i]) failing.push_back(i + 1);
  if (!failing.empty()) os << " (fails dropping " << index_list(failing) << ")";
  os << "\npointed          " << yes_no(is_pointed_grading(doc.grading)) << "\n";
  for (const auto& w : v.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string orbit_cones_to_text(const OrbitConeSet& omega) {
  std::ostringstream os;
  os << "orbit cones (" << omega.size() << ")\n";
  for (std::size_t i = 0; i < omega.size(); ++i)
    os << "  " << i << "  dim " << omega.cones[i].dim() << "  " << omega.cones[i].label()
       << (i == omega.generic ? "  [weight cone]" : "") << "\n";
  return os.str();
}

std::string git_fan_to_text(const GitFan& fan) {
  std::ostringstream os;
  os << "GIT fan (" << fan.cones.size() << " cones)\n";
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    os << "  " << i << "  dim " << fan.cones[i].dim() << "  " << fan.cones[i].label();
    if (fan.chamber[i]) os << "  [chamber]";
    if (fan.interior[i]) os << "  [interior]";
    os << "\n";
  }
  return os.str();
}

std::string collections_to_text(const Classification& c) {
  std::ostringstream os;
  os << "2-maximal collections (" << c.collections.size() << ", " << c.interior.size() << " interior)\n";
  for (std::size_t i = 0; i < c.collections.size(); ++i) {
    const auto& col = c.collections[i];
    std::vector<std::string> labels;
    for (std::size_t m : col.members) labels.push_back(c.omega.cones[m].label());
    os << "  " << (col.interior ? collection_name(i) : std::to_string(i)) << "  {" << join(labels, ", ") << "}";
    if (col.interior) os << "  interior";
    if (col.projective)
      os << "  projective";
    else if (col.quasiprojective)
      os << "  quasiprojective";
    if (col.git_witness) os << "  witness " << col.git_witness->label();
    os << "\n";
  }
  const auto names = interior_names(c);
  os << "morphisms\n";
  const auto hasse = c.poset.hasse();
  if (hasse.empty()) os << "  (none)\n";
  for (const auto& [i, j] : hasse) os << "  " << names[j] << " -> " << names[i] << "\n";
  return os.str();
}

std::string classification_to_text(const Classification& c) {
  std::ostringstream os;
  os << validation_to_text(c.input, c.validation) << "\n"
     << orbit_cones_to_text(c.omega) << "\n"
     << git_fan_to_text(c.fan) << "\n"
     << collections_to_text(c) << "\n";
  os << "embeddings\n";
  std::vector<std::vector<std::string>> rows{
      {"variety", "bunch", "LF", "QF", "Pic rank", "Pic index", "ample", "projective"}};
  for (const auto& g : c.geometry)
    rows.push_back({collection_name(g.collection_id), join_labels(g.bunch), yes_no(g.locally_factorial),
                    yes_no(g.q_factorial), std::to_string(g.picard.rank()), index_string(g.picard_index),
                    yes_no(g.ample.ample_nonempty), g.projective ? "yes" : g.quasiprojective ? "quasi" : "no"});
  os << table(rows);
  if (c.input.grading.mode == FaceMode::suitable) os << "  (LF doubles as smoothness by the toric criterion)\n";
  for (const auto& s : c.bunch_studies) {
    os << "\nbunch " << s.name << ": " << join_labels(s.bunch) << "\n";
    os << "  valid " << yes_no(s.check.ok()) << "\n";
    for (const auto& p : s.check.problems) os << "  problem: " << p << "\n";
    if (s.collection) {
      const auto& col = c.collections[*s.collection];
      os << "  collection " << *s.collection << (col.interior ? " (interior)" : "") << ", quasiprojective "
         << yes_no(col.quasiprojective) << "\n";
    }
    if (s.geometry)
      os << "  locally factorial " << yes_no(s.geometry->locally_factorial) << ", Q-factorial "
         << yes_no(s.geometry->q_factorial) << ", ample cone nonempty " << yes_no(s.geometry->ample.ample_nonempty)
         << "\n";
    if (!s.error.empty()) os << "  error: " << s.error << "\n";
  }
  if (!c.warnings.empty()) {
    os << "\nwarnings\n";
    for (const auto& w : c.warnings) os << "  " << w << "\n";
  }
  return os.str();
}

// ---- DOT ----

namespace {

std::string dot(const MorphismPoset& poset, const std::vector<std::string>& names,
                const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph embeddings {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < names.size(); ++i) os << "  \"" << names[i] << "\" [label=\"" << labels[i] << "\"];\n";
  for (const auto& [i, j] : poset.hasse()) os << "  \"" << names[j] << "\" -> \"" << names[i] << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string emit_dot(const MorphismPoset& poset, const std::vector<std::string>& names) {
  return dot(poset, names, names);
}

std::string emit_dot(const Classification& c) {
  const auto names = interior_names(c);
  std::vector<std::string> labels;
  for (std::size_t n = 0; n < c.interior.size(); ++n) {
    const auto& col = c.collections[c.interior[n]];
    std::vector<std::string> flags;
    flags.push_back(col.projective ? "projective" : col.quasiprojective ? "quasiprojective" : "not quasiprojective");
    if (n < c.geometry.size()) {
      if (c.geometry[n].locally_factorial) flags.push_back("locally factorial");
      else if (c.geometry[n].q_factorial) flags.push_back("Q-factorial");
    }
    labels.push_back(names[n] + "\\n" + join(flags, ", "));
  }
  return dot(c.poset, names, labels);
}

}  // namespace conequot
