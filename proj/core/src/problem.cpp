#include "biqtor/problem.hpp"

#include <json.hpp>

#include "biqtor/toral_tor.hpp"

namespace biqtor {

using nlohmann::json;

namespace {

constexpr std::int64_t kSafeInt = 9007199254740991;  // 2^53 - 1

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    const long l = v.get_si();
    if (l >= -kSafeInt && l <= kSafeInt) return l;
  }
  return v.get_str();  // decimal string beyond 53-bit safety
}

Int json_to_int(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("spec: expected an integer (number or decimal string)");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix json_to_matrix(const json& j, std::size_t expected_cols) {
  if (!j.is_array()) throw std::invalid_argument("spec: matrix must be an array of arrays");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("spec: matrix row must be an array");
    std::vector<Int> r;
    for (const auto& v : row) r.push_back(json_to_int(v));
    if (r.size() != expected_cols)
      throw std::invalid_argument("spec: matrix row width differs from the group rank");
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(expected_cols, rows);
}

json invariants_to_json(const AbelianInvariants& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion) torsion.push_back(int_to_json(d));
  return json{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}, {"pretty", g.to_string()}};
}

json group_to_json(const GroupSpec& g) {
  json factors = json::array();
  for (const auto& f : g.factors) {
    switch (f.type) {
      case GroupFactor::Type::SU: factors.push_back(json{{"type", "SU"}, {"n", f.n}}); break;
      case GroupFactor::Type::Sp: factors.push_back(json{{"type", "Sp"}, {"n", f.n}}); break;
      case GroupFactor::Type::Torus:
        factors.push_back(json{{"type", "torus"}, {"rank", f.n}});
        break;
    }
  }
  return json{{"factors", std::move(factors)}, {"pretty", g.to_string()}};
}

GroupSpec json_to_group(const json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    throw std::invalid_argument("spec: group must be an object with a factors array");
  GroupSpec g;
  for (const auto& f : j["factors"]) {
    if (!f.is_object() || !f.contains("type"))
      throw std::invalid_argument("spec: group factor needs a type");
    const std::string type = f["type"].get<std::string>();
    if (type == "SU") {
      g.factors.push_back(su(f.at("n").get<std::size_t>()));
    } else if (type == "Sp") {
      g.factors.push_back(sp(f.at("n").get<std::size_t>()));
    } else if (type == "torus") {
      const auto& sz = f.contains("rank") ? f.at("rank") : f.at("n");
      g.factors.push_back(torus(sz.get<std::size_t>()));
    } else {
      throw std::invalid_argument("spec: unknown factor type '" + type + "'");
    }
  }
  return g;
}

SubgroupInput json_to_subgroup(const json& j, std::size_t rank) {
  if (!j.is_object()) throw std::invalid_argument("spec: subgroup must be an object");
  SubgroupInput s;
  if (j.contains("cocharacters")) {
    s.kind = SubgroupInput::Kind::Cocharacters;
    s.matrix = json_to_matrix(j["cocharacters"], rank);
  } else if (j.contains("k_basis")) {
    s.kind = SubgroupInput::Kind::KBasis;
    s.matrix = json_to_matrix(j["k_basis"], rank);
  } else {
    throw std::invalid_argument("spec: subgroup needs either 'cocharacters' or 'k_basis'");
  }
  return s;
}

json subgroup_to_json(const SubgroupInput& s) {
  const char* key = s.kind == SubgroupInput::Kind::Cocharacters ? "cocharacters" : "k_basis";
  return json{{key, matrix_to_json(s.matrix)}};
}

json stats_to_json(const BudgetStats& stats) {
  return json{{"spairs_reduced", stats.spairs_reduced},
              {"max_degree_seen", stats.max_degree_seen},
              {"bases_built", stats.bases_built}};
}

json tor_result_to_json(const TorResult& tor) {
  json degrees = json::array();
  for (const auto& d : tor.degrees) {
    json jd{{"degree", d.degree}, {"is_zero", d.is_zero}};
    if (d.finite_dim)
      jd["finite_dim"] = int_to_json(*d.finite_dim);
    else
      jd["presentation"] = json{{"generators", d.presentation_rank},
                                {"relations", d.presentation_relations}};
    degrees.push_back(std::move(jd));
  }
  json out{{"field", tor.field.to_string()}, {"degrees", std::move(degrees)}};
  if (tor.diagnostic_only)
    out["diagnostic_only"] =
        "mod-p dimensions are diagnostics; they do not determine the integral Tor";
  else
    out["coefficient_note"] =
        "verdicts are rational: zero means zero after tensoring with Q; integral torsion is "
        "reported exactly only on the ambient-torus path";
  return out;
}

json profile_to_json(const TorProfile& p) {
  json degrees = json::array();
  for (std::size_t i = 0; i <= p.rho; ++i) {
    json jd{{"degree", i}, {"multiplicity", int_to_json(p.multiplicity(i))}};
    if (p.has_finite_rank(i))
      jd["z_rank"] = int_to_json(p.z_rank(i));
    else
      jd["group_ring_of"] = invariants_to_json(p.coefficient_group);
    degrees.push_back(std::move(jd));
  }
  return json{{"rho", p.rho},
              {"coefficient_group", invariants_to_json(p.coefficient_group)},
              {"degrees", std::move(degrees)},
              {"zero_above", p.rho}};
}

json kgroup_to_json(const KGroupDescriptor& g) {
  json out;
  out["pretty"] = g.to_string();
  if (g.infinite_rank) {
    out["infinite_rank"] = true;
    if (g.group_ring_of) out["group_ring_of"] = invariants_to_json(*g.group_ring_of);
    if (g.multiplicity != 0) out["multiplicity"] = int_to_json(g.multiplicity);
  } else {
    if (g.z_rank) out["z_rank"] = int_to_json(*g.z_rank);
    if (g.q_dim) out["q_dim"] = int_to_json(*g.q_dim);
  }
  return out;
}

json classification_to_json(const PairClassification& cls) {
  json out{{"verdict", to_string(cls.verdict)}};
  if (cls.witness) out["witness_weyl_element"] = matrix_to_json(cls.witness->matrix);
  if (cls.witness_intersection)
    out["witness_intersection_characters"] = invariants_to_json(*cls.witness_intersection);
  return out;
}

}  // namespace

TorusSubgroup SubgroupInput::realize(std::size_t ambient_rank) const {
  if (kind == Kind::Cocharacters) return subgroup_from_cocharacters(ambient_rank, matrix);
  return TorusSubgroup::from_vanishing_lattice(
      ambient_rank, Sublattice::from_generators(ambient_rank, matrix));
}

Command parse_command(const std::string& name) {
  if (name == "check") return Command::Check;
  if (name == "tor") return Command::Tor;
  if (name == "ktheory") return Command::KTheory;
  if (name == "enlarge") return Command::Enlarge;
  throw std::invalid_argument("unknown command '" + name + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Check: return "check";
    case Command::Tor: return "tor";
    case Command::KTheory: return "ktheory";
    case Command::Enlarge: return "enlarge";
  }
  return "?";
}

BiquotientSpec parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("spec: JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("spec: top level must be an object");
  if (!j.contains("schema_version"))
    throw std::invalid_argument("spec: schema_version is mandatory");
  BiquotientSpec spec;
  spec.schema_version = j["schema_version"].get<int>();
  if (spec.schema_version != kSchemaVersion)
    throw std::invalid_argument("spec: unsupported schema_version");
  if (!j.contains("group")) throw std::invalid_argument("spec: missing group");
  spec.group = json_to_group(j["group"]);
  const std::size_t rank = spec.group.rank();
  if (!j.contains("subgroup1") || !j.contains("subgroup2"))
    throw std::invalid_argument("spec: missing subgroup1/subgroup2");
  spec.subgroup1 = json_to_subgroup(j["subgroup1"], rank);
  spec.subgroup2 = json_to_subgroup(j["subgroup2"], rank);
  if (j.contains("options")) {
    const json& o = j["options"];
    if (o.contains("field")) spec.options.field = FieldTag::parse(o["field"].get<std::string>());
    if (o.contains("seed")) spec.options.seed = o["seed"].get<std::uint64_t>();
    if (o.contains("max_spairs")) spec.options.budget.max_spairs = o["max_spairs"].get<std::uint64_t>();
    if (o.contains("max_degree")) spec.options.budget.max_degree = o["max_degree"].get<std::int64_t>();
    if (o.contains("retries_per_window"))
      spec.options.retries_per_window = o["retries_per_window"].get<int>();
    if (o.contains("window_doublings"))
      spec.options.window_doublings = o["window_doublings"].get<int>();
    if (o.contains("certify")) spec.options.certify = o["certify"].get<bool>();
  }
  return spec;
}

std::string spec_to_json(const BiquotientSpec& spec) {
  json j{{"schema_version", spec.schema_version},
         {"group", group_to_json(spec.group)},
         {"subgroup1", subgroup_to_json(spec.subgroup1)},
         {"subgroup2", subgroup_to_json(spec.subgroup2)},
         {"options",
          json{{"field", spec.options.field.to_string()},
               {"seed", spec.options.seed},
               {"max_spairs", spec.options.budget.max_spairs},
               {"max_degree", spec.options.budget.max_degree},
               {"retries_per_window", spec.options.retries_per_window},
               {"window_doublings", spec.options.window_doublings},
               {"certify", spec.options.certify}}}};
  return j.dump();
}

RunResult run_command(Command cmd, const BiquotientSpec& spec) {
  RootDatum datum = build_root_datum(spec.group);
  TorusSubgroup s1 = spec.subgroup1.realize(datum.rank);
  TorusSubgroup s2 = spec.subgroup2.realize(datum.rank);

  TorOptions topts;
  topts.budget = spec.options.budget;
  topts.certify = spec.options.certify;

  json report{{"schema_version", kSchemaVersion},
              {"command", to_string(cmd)},
              {"spec", json::parse(spec_to_json(spec))},
              {"subgroup_ranks", json::array({s1.rank(), s2.rank()})},
              {"group_rank", datum.rank}};

  RunResult out;
  switch (cmd) {
    case Command::Check: {
      PairClassification cls = classify_pair(datum, s1, s2);
      report["classification"] = classification_to_json(cls);
      report["intersection_rank"] = intersection_rank(datum, s1, s2);
      report["vanishing_bound"] = vanishing_bound(datum, s1, s2);
      break;
    }
    case Command::Tor: {
      if (spec.group.is_torus() && !spec.options.field.is_rational())
        throw std::invalid_argument("tor: prime-field mode applies to the Koszul path only");
      VerificationReport ver = verify_theorem(datum, s1, s2, topts);
      report["classification"] = classification_to_json(ver.classification);
      report["intersection_rank"] = intersection_rank(datum, s1, s2);
      report["vanishing_bound"] = ver.bound;
      report["tor"] = tor_result_to_json(ver.tor);
      report["observed_nonzero_degrees"] = ver.observed_nonzero_degrees;
      report["theorem_consistent"] = ver.theorem_consistent;
      if (ver.exact) {
        report["exact"] = profile_to_json(*ver.exact);
        report["cross_checked"] = ver.cross_checked;
      }
      if (!spec.options.field.is_rational())
        report["tor_mod_p"] = tor_result_to_json(
            tor_good_group(datum, s1, s2, spec.options.field, topts));
      report["diagnostics"] = stats_to_json(ver.tor.stats);
      if (ver.inconclusive) {
        report["inconclusive"] = *ver.inconclusive;
        out.exit_code = 2;
      } else if (!ver.theorem_consistent) {
        // minimized witness: first offending degree of the smallest instance seen
        std::size_t first_bad = 0;
        for (std::size_t d : ver.observed_nonzero_degrees)
          if (static_cast<long>(d) > ver.bound) {
            first_bad = d;
            break;
          }
        report["witness"] = json{{"degree", first_bad},
                                 {"bound", ver.bound},
                                 {"verdict", to_string(ver.classification.verdict)}};
        out.exit_code = 3;
      }
      break;
    }
    case Command::KTheory: {
      KTheoryReport k = ktheory_biquotient(datum, s1, s2, topts);
      report["ktheory"] = json{{"k0", kgroup_to_json(k.k0)},
                               {"k1", kgroup_to_json(k.k1)},
                               {"strict_condition_held", k.strict_condition_held},
                               {"rank_inequality_held", k.rank_inequality_held},
                               {"maximal_rank", k.maximal_rank}};
      break;
    }
    case Command::Enlarge: {
      EnlargeOptions eopts;
      eopts.seed = spec.options.seed;
      eopts.retries_per_window = spec.options.retries_per_window;
      eopts.window_doublings = spec.options.window_doublings;
      TorusSubgroup enlarged = enlarge_torus(datum, s1, s2, eopts);
      const std::size_t inter = intersection_rank(datum, enlarged, s2);
      report["enlarged"] = json{
          {"k_basis", matrix_to_json(enlarged.k.basis())},
          {"rank", enlarged.rank()},
          {"postconditions",
           json{{"contains_original", enlarged.rank() >= s1.rank() && s1.k.contains(enlarged.k)},
                {"is_summand", is_direct_summand(enlarged.k)},
                {"intersection_rank_preserved", inter == intersection_rank(datum, s1, s2)},
                {"maximal_rank_equality", datum.rank == enlarged.rank() + s2.rank() - inter}}}};
      break;
    }
  }
  out.report_json = report.dump(2) + "\n";
  return out;
}

}  // namespace biqtor
