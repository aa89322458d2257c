// hrg: command-line front end for the library.
//
// Subcommands:
//   build     construct a graph family and write it to a graph file
//   verify    run structural checks on a graph file or a named subgroup system
//   spectrum  compute a spectral certificate for a graph file
//   degrees   print a closed-form degree profile
//
// Every run emits a manifest (command, parameters, seed, caps, tool version,
// timestamps) that pins down how to reproduce it.  Graph files embed the
// manifest as a comment line; reports carry it as a JSON field.
//
// Exit codes: 0 all checks passed (or build/degrees succeeded), 1 a check
// failed, 2 a capacity limit was hit, 3 invalid parameters or input, 4 the
// requested certificate is undefined for the input (informational).

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hrg/cosetgeom.hpp"
#include "hrg/degrees.hpp"
#include "hrg/errors.hpp"
#include "hrg/io.hpp"
#include "hrg/lattice.hpp"
#include "hrg/multipartite.hpp"
#include "hrg/product.hpp"
#include "hrg/spectral.hpp"

#ifndef HRG_TOOL_VERSION
#define HRG_TOOL_VERSION "0.0.0"
#endif

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitInvalidParams = 3;
constexpr int kExitInformational = 4;

// The eigensolver's internal power-iteration seed; recorded so the manifest
// states every input that determines the output.
constexpr std::int64_t kEigensolverSeed = 24301;

std::string iso_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

ordered_json make_manifest(const std::string& command,
                           const ordered_json& parameters,
                           const std::string& started) {
  return ordered_json{
      {"command", command},
      {"parameters", parameters},
      {"seed", kEigensolverSeed},
      {"caps", ordered_json{{"vertex_cap", hrg::default_capacity()}}},
      {"tool_version", HRG_TOOL_VERSION},
      {"timestamps",
       ordered_json{{"started", started}, {"finished", iso_utc_now()}}},
  };
}

ordered_json face_json(const hrg::Face& f) {
  return ordered_json{{"vertices", f.vertices}, {"types", f.types}};
}

ordered_json check_entry(const std::string& name, bool pass,
                         ordered_json values,
                         ordered_json witness = nullptr,
                         ordered_json tolerance = nullptr) {
  return ordered_json{{"check", name},
                      {"verdict", pass ? "pass" : "fail"},
                      {"values", std::move(values)},
                      {"witness", std::move(witness)},
                      {"tolerance", std::move(tolerance)}};
}

void emit_report(const ordered_json& report, const std::string& out_path) {
  std::cout << report.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw hrg::IoError("cannot open " + out_path + " for writing");
    out << report.dump(2) << "\n";
  }
}

// Accepted forms for `build --construction symmetrize --group ...`:
//   s<d>      the full symmetric group on d part indices
//   c<d>      the cyclic rotation group on d part indices
//   id<d>     the trivial group on d part indices
//   gens:<perm>;<perm>;...   explicit generators, each a comma-separated
//                            list of images of 0..d-1
hrg::PermGroup parse_group(const std::string& text) {
  auto parse_degree = [&](std::size_t offset) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(text.substr(offset), &used);
    } catch (const std::exception&) {
      throw hrg::InvalidParamsError("cannot parse group '" + text + "'");
    }
    if (used != text.size() - offset || d < 1)
      throw hrg::InvalidParamsError("cannot parse group '" + text + "'");
    return d;
  };
  auto rotation = [](int d) {
    std::vector<int> w(d);
    for (int i = 0; i < d; ++i) w[i] = (i + 1) % d;
    return w;
  };
  if (text.rfind("gens:", 0) == 0) {
    std::vector<std::vector<int>> gens;
    std::size_t degree = 0;
    std::stringstream all(text.substr(5));
    std::string one;
    while (std::getline(all, one, ';')) {
      std::vector<int> perm;
      std::stringstream images(one);
      std::string image;
      while (std::getline(images, image, ',')) {
        try {
          perm.push_back(std::stoi(image));
        } catch (const std::exception&) {
          throw hrg::InvalidParamsError("cannot parse group '" + text + "'");
        }
      }
      if (gens.empty()) degree = perm.size();
      gens.push_back(std::move(perm));
    }
    if (gens.empty())
      throw hrg::InvalidParamsError("gens: needs at least one permutation");
    return hrg::PermGroup(static_cast<int>(degree), std::move(gens));
  }
  if (text.rfind("id", 0) == 0) return hrg::PermGroup(parse_degree(2), {});
  if (!text.empty() && (text[0] == 's' || text[0] == 'S')) {
    int d = parse_degree(1);
    if (d == 1) return hrg::PermGroup(1, {});
    std::vector<std::vector<int>> gens{rotation(d)};
    std::vector<int> swap_first(d);
    for (int i = 0; i < d; ++i) swap_first[i] = i;
    std::swap(swap_first[0], swap_first[1]);
    gens.push_back(std::move(swap_first));
    return hrg::PermGroup(d, std::move(gens));
  }
  if (!text.empty() && (text[0] == 'c' || text[0] == 'C')) {
    int d = parse_degree(1);
    if (d == 1) return hrg::PermGroup(1, {});
    return hrg::PermGroup(d, {rotation(d)});
  }
  throw hrg::InvalidParamsError("cannot parse group '" + text + "'");
}

// ---------------------------------------------------------------------------
// build

struct BuildArgs {
  std::string construction;
  std::string out_path;
  std::string dot_path;
  std::string in_path;
  std::string in2_path;
  std::string group;
  int n = -1;
  int m = -1;
  int k = -1;
  int r = -1;
  int s = -1;
  std::int64_t q = -1;
};

void require_set(bool ok, const std::string& message) {
  if (!ok) throw hrg::InvalidParamsError(message);
}

int run_build(const BuildArgs& a) {
  const std::string started = iso_utc_now();
  ordered_json params{{"construction", a.construction}};
  hrg::PartiteGraph g;
  if (a.construction == "el") {
    int n = a.n < 0 ? 2 : a.n;
    require_set(a.q >= 2 && a.s >= 1, "el needs --q >= 2 and --s >= 1");
    params["n"] = n;
    params["q"] = a.q;
    params["s"] = a.s;
    g = hrg::el_quotient_complex(n + 1, a.q, a.s).host;
  } else if (a.construction == "affine") {
    int m = a.m < 0 ? 3 : a.m;
    require_set(a.k >= 1, "affine needs --k >= 1");
    params["m"] = m;
    params["k"] = a.k;
    g = hrg::affine_quotient_complex(m, a.k).host;
  } else if (a.construction == "stair") {
    require_set(a.n >= 2 && a.k >= 1, "stair needs --n >= 2 and --k >= 1");
    params["n"] = a.n;
    params["k"] = a.k;
    g = hrg::stair_graph(a.n, a.k);
  } else if (a.construction == "three-level") {
    require_set(a.r >= 1 && a.k >= 1,
                "three-level needs --r >= 1 and --k >= 1");
    params["r"] = a.r;
    params["k"] = a.k;
    g = hrg::three_level_graph(a.r, a.k);
  } else if (a.construction == "knight") {
    int k = a.k < 0 ? 2 : a.k;
    params["k"] = k;
    g = hrg::knight_cycle_complex(k).host;
  } else if (a.construction == "symmetrize") {
    require_set(!a.in_path.empty() && !a.group.empty(),
                "symmetrize needs --in and --group");
    params["in"] = a.in_path;
    params["group"] = a.group;
    g = hrg::symmetrize(hrg::load_graph(a.in_path), parse_group(a.group));
  } else if (a.construction == "product") {
    require_set(!a.in_path.empty() && !a.in2_path.empty(),
                "product needs --in and --in2");
    params["in"] = a.in_path;
    params["in2"] = a.in2_path;
    g = hrg::partite_product(hrg::load_graph(a.in_path),
                             hrg::load_graph(a.in2_path));
  } else {
    throw hrg::InvalidParamsError("unknown construction '" + a.construction +
                                  "'");
  }
  params["out"] = a.out_path;

  const ordered_json manifest = make_manifest("build", params, started);
  hrg::save_graph(g, a.out_path, manifest.dump());
  if (!a.dot_path.empty()) {
    std::ofstream dot(a.dot_path);
    if (!dot)
      throw hrg::IoError("cannot open " + a.dot_path + " for writing");
    hrg::write_dot(g, dot);
  }

  ordered_json part_sizes = ordered_json::array();
  for (int p = 0; p < g.nparts(); ++p) part_sizes.push_back(g.part_size(p));
  emit_report(ordered_json{{"out", a.out_path},
                           {"vertices", g.num_vertices()},
                           {"edges", g.num_edges()},
                           {"parts", part_sizes},
                           {"manifest", manifest}},
              "");
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string in_path;
  std::vector<std::string> checks;
  std::string sgs;
  bool all_pairs = false;
  std::string out_path;
};

ordered_json run_one_check(const hrg::PartiteGraph& g,
                           const std::string& name) {
  if (name == "regularity") {
    hrg::DegreeProfileResult r = hrg::degree_profile(g);
    ordered_json values;
    ordered_json witness;
    if (r.ok()) {
      values["profile"] = r.profile->dims;
    } else {
      const hrg::ProfileWitness& w = *r.witness;
      const char* reason =
          w.reason == hrg::ProfileFailure::kMismatchedLinkSizes
              ? "two same-size cliques have different link sizes"
          : w.reason == hrg::ProfileFailure::kEmptyLink
              ? "a clique below top dimension has an empty link"
              : "link sizes per level are not strictly decreasing";
      witness = ordered_json{{"reason", reason},
                             {"clique", face_json(w.first)},
                             {"link_size", w.first_link_size}};
      if (w.second) witness["other_clique"] = face_json(*w.second);
      if (w.second_link_size) witness["other_link_size"] = *w.second_link_size;
    }
    return check_entry(name, r.ok(), values, witness);
  }
  if (name == "purity") {
    hrg::PurityResult r = hrg::is_pure(g);
    ordered_json witness;
    if (!r.ok && r.witness)
      witness = ordered_json{{"clique_without_top_extension",
                              face_json(*r.witness)}};
    return check_entry(name, r.ok, ordered_json::object(), witness);
  }
  if (name == "gallery") {
    hrg::GalleryConnectivityResult r = hrg::is_strongly_gallery_connected(g);
    ordered_json witness;
    if (!r.ok && r.witness)
      witness = ordered_json{{"disconnected_link_of", face_json(*r.witness)}};
    return check_entry(name, r.ok, ordered_json::object(), witness);
  }
  if (name == "type-regularity") {
    hrg::TypeRegularityResult r = hrg::type_regularity(g);
    ordered_json values;
    if (r.ok) {
      ordered_json table = ordered_json::object();
      for (const auto& [type_set, counts] : r.table) {
        std::string key;
        for (std::size_t i = 0; i < type_set.size(); ++i) {
          if (i) key += ",";
          key += std::to_string(type_set[i]);
        }
        ordered_json row = ordered_json::object();
        for (const auto& [part, count] : counts)
          row[std::to_string(part)] = count;
        table[key.empty() ? "-" : key] = std::move(row);
      }
      values["table"] = std::move(table);
    }
    ordered_json witness;
    if (!r.ok && r.witness_a)
      witness = ordered_json{{"clique", face_json(*r.witness_a)},
                             {"other_clique", face_json(*r.witness_b)},
                             {"part", *r.witness_part}};
    return check_entry(name, r.ok, values, witness);
  }
  throw hrg::InvalidParamsError("unknown check '" + name + "'");
}

// Named subgroup systems for `verify --sgs`.  Each closes the per-type
// generator lists into full subgroup element sets.
struct NamedSystem {
  hrg::FiniteGroupHandle group;
  std::vector<std::vector<hrg::GroupElem>> subgroups;
};

NamedSystem make_named_system(const std::string& name) {
  auto close_all = [](const hrg::FiniteGroupHandle& g) {
    std::vector<std::vector<hrg::GroupElem>> closed;
    for (const auto& gens : hrg::standard_subgroups(g))
      closed.push_back(hrg::subgroup_closure(g, gens));
    return closed;
  };
  if (name == "affine-3") {
    hrg::FiniteGroupHandle g = hrg::affine_group(3, 2);
    return {g, close_all(g)};
  }
  if (name == "el-3-2-2") {
    hrg::FiniteGroupHandle g = hrg::el_group(3, 2, 2);
    return {g, close_all(g)};
  }
  if (name == "affine-3-broken") {
    hrg::FiniteGroupHandle g = hrg::affine_group(3, 2);
    std::vector<std::vector<hrg::GroupElem>> subgroups = close_all(g);
    subgroups.back() = {g.ops->identity()};
    return {g, std::move(subgroups)};
  }
  throw hrg::InvalidParamsError("unknown subgroup system '" + name + "'");
}

ordered_json sgs_witness_json(const hrg::FiniteGroupHandle& g,
                              const std::optional<hrg::SgsWitness>& w) {
  if (!w) return nullptr;
  ordered_json out{{"tau", w->tau}, {"tau_prime", w->tau_prime}};
  if (w->index >= 0) out["index"] = w->index;
  if (w->offender) out["offender"] = g.ops->describe(*w->offender);
  return out;
}

int run_verify(const VerifyArgs& a) {
  const std::string started = iso_utc_now();
  ordered_json params;
  ordered_json checks = ordered_json::array();
  bool all_pass = true;

  if (!a.sgs.empty()) {
    params["sgs"] = a.sgs;
    params["all_pairs"] = a.all_pairs;
    NamedSystem sys = make_named_system(a.sgs);
    hrg::SgsReport r =
        hrg::check_sgs_axioms(sys.group, sys.subgroups, a.all_pairs);
    checks.push_back(check_entry("sgs-generation", r.generation,
                                 ordered_json::object(),
                                 sgs_witness_json(sys.group,
                                                  r.generation_witness)));
    checks.push_back(check_entry("sgs-products", r.products,
                                 ordered_json::object(),
                                 sgs_witness_json(sys.group,
                                                  r.products_witness)));
    checks.push_back(check_entry("sgs-strict-chain", r.strict_chain,
                                 ordered_json::object(),
                                 sgs_witness_json(sys.group,
                                                  r.strict_chain_witness)));
    all_pass = r.ok();
  } else {
    require_set(!a.in_path.empty(), "verify needs --in or --sgs");
    params["in"] = a.in_path;
    std::vector<std::string> names = a.checks;
    if (names.empty())
      names = {"regularity", "purity", "gallery", "type-regularity"};
    params["checks"] = names;
    hrg::PartiteGraph g = hrg::load_graph(a.in_path);
    for (const std::string& name : names) {
      ordered_json entry = run_one_check(g, name);
      all_pass = all_pass && entry["verdict"] == "pass";
      checks.push_back(std::move(entry));
    }
  }

  emit_report(ordered_json{{"checks", checks},
                           {"all_pass", all_pass},
                           {"manifest", make_manifest("verify", params,
                                                      started)}},
              a.out_path);
  return all_pass ? kExitPass : kExitCheckFail;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
  std::string in_path;
  double lambda_target = 0;
  double tolerance = 1e-9;
  int jobs = 1;
  std::string out_path;
};

int run_spectrum(const SpectrumArgs& a) {
  const std::string started = iso_utc_now();
  ordered_json params{{"in", a.in_path},
                      {"lambda_target", a.lambda_target},
                      {"tolerance", a.tolerance},
                      {"jobs", a.jobs}};
  hrg::PartiteGraph g = hrg::load_graph(a.in_path);

  hrg::SpectralCertificate cert;
  try {
    cert = hrg::hdx_certificate(g, a.lambda_target, a.tolerance, a.jobs);
  } catch (const hrg::NotPureError& e) {
    emit_report(
        ordered_json{{"check", "spectral"},
                     {"verdict", "undefined"},
                     {"values", ordered_json{{"reason", e.what()}}},
                     {"witness", nullptr},
                     {"tolerance", a.tolerance},
                     {"manifest", make_manifest("spectrum", params, started)}},
        a.out_path);
    return kExitInformational;
  } catch (const hrg::DisconnectedError& e) {
    emit_report(
        ordered_json{{"check", "spectral"},
                     {"verdict", "undefined"},
                     {"values", ordered_json{{"reason", e.what()}}},
                     {"witness", nullptr},
                     {"tolerance", a.tolerance},
                     {"manifest", make_manifest("spectrum", params, started)}},
        a.out_path);
    return kExitInformational;
  }

  ordered_json values{{"global_lambda2", cert.global_lambda2},
                      {"max_link_lambda2", cert.max_link_lambda2},
                      {"link_count", cert.link_lambda2.size()},
                      {"lambda_target", cert.lambda_target}};
  if (cert.trickle_mu)
    values["trickle_mu"] = *cert.trickle_mu;
  else
    values["trickle_mu"] = nullptr;

  // The worst offender (or the worst link overall when the verdict passes).
  ordered_json witness;
  const std::vector<hrg::VertexId>* worst = nullptr;
  double worst_value = -1;
  for (const auto& [vertices, lambda2] : cert.link_lambda2) {
    if (lambda2 > worst_value) {
      worst_value = lambda2;
      worst = &vertices;
    }
  }
  if (worst)
    witness = ordered_json{{"worst_link_face", *worst},
                           {"lambda2", worst_value}};

  emit_report(
      ordered_json{{"check", "spectral"},
                   {"verdict", cert.pass ? "pass" : "fail"},
                   {"values", values},
                   {"witness", witness},
                   {"tolerance", cert.tolerance},
                   {"manifest", make_manifest("spectrum", params, started)}},
      a.out_path);
  return cert.pass ? kExitPass : kExitCheckFail;
}

// ---------------------------------------------------------------------------
// degrees

struct DegreesArgs {
  std::string family;
  int n = -1;
  int m = -1;
  int r = -1;
  std::int64_t q = -1;
  std::string out_path;
};

int run_degrees(const DegreesArgs& a) {
  const std::string started = iso_utc_now();
  hrg::DegreeFormulaInput input;
  ordered_json params{{"family", a.family}};
  hrg::BigDegreeProfile profile;
  if (a.family == "el-base" || a.family == "el-symmetrized" ||
      a.family == "el-adhoc") {
    input.family = a.family == "el-base"     ? hrg::DegreeFamily::kElBase
                   : a.family == "el-adhoc"  ? hrg::DegreeFamily::kElAdhoc
                                             : hrg::DegreeFamily::kElSymmetrized;
    input.n = a.n >= 0 ? a.n : (a.family == "el-adhoc" ? 4 : 2);
    input.q = a.q;
    params["n"] = input.n;
    params["q"] = input.q;
    profile = hrg::el_profile(input);
  } else if (a.family == "affine-base" || a.family == "affine-symmetrized") {
    input.family = a.family == "affine-base"
                       ? hrg::DegreeFamily::kAffineBase
                       : hrg::DegreeFamily::kAffineSymmetrized;
    input.m = a.m >= 0 ? a.m : 3;
    params["m"] = input.m;
    profile = hrg::affine_profile(input);
  } else if (a.family == "affine-3r" || a.family == "affine-adhoc") {
    input.family = a.family == "affine-3r" ? hrg::DegreeFamily::kAffine3r
                                           : hrg::DegreeFamily::kAffineAdhoc;
    input.m = a.family == "affine-3r" ? 3 : 5;
    input.r = a.r;
    params["r"] = input.r;
    profile = hrg::affine_profile(input);
  } else {
    throw hrg::InvalidParamsError("unknown degree family '" + a.family + "'");
  }

  // Degrees can exceed any machine integer, so they print as decimal strings.
  ordered_json dims = ordered_json::array();
  for (const mpz_class& d : profile.dims) dims.push_back(d.get_str());
  emit_report(ordered_json{{"family", a.family},
                           {"profile", dims},
                           {"manifest", make_manifest("degrees", params,
                                                      started)}},
              a.out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyper-regular graph toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HRG_TOOL_VERSION);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand(
      "build", "construct a graph family and write a graph file");
  build->add_option("--construction", build_args.construction,
                    "el | affine | stair | three-level | knight | "
                    "symmetrize | product")
      ->required();
  build->add_option("--out", build_args.out_path, "output graph file")
      ->required();
  build->add_option("--dot", build_args.dot_path,
                    "also write a DOT rendering (small graphs only)");
  build->add_option("--in", build_args.in_path,
                    "input graph file (symmetrize, product)");
  build->add_option("--in2", build_args.in2_path,
                    "second input graph file (product)");
  build->add_option("--group", build_args.group,
                    "acting group: s<d>, c<d>, id<d>, or gens:0,2,1;...");
  build->add_option("--n", build_args.n, "dimension (el) or axes (stair)");
  build->add_option("--m", build_args.m, "strands (affine)");
  build->add_option("--k", build_args.k,
                    "window scale (affine, knight) or side (stair, "
                    "three-level)");
  build->add_option("--r", build_args.r, "spacing (three-level)");
  build->add_option("--s", build_args.s, "ring truncation (el)");
  build->add_option("--q", build_args.q, "field size (el)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "run structural checks on a graph file or subgroup system");
  verify->add_option("--in", verify_args.in_path, "graph file to check");
  verify->add_option("--checks", verify_args.checks,
                     "comma-separated subset of regularity, purity, gallery, "
                     "type-regularity (default: all)")
      ->delimiter(',');
  verify->add_option("--sgs", verify_args.sgs,
                     "named subgroup system: affine-3 | el-3-2-2 | "
                     "affine-3-broken");
  verify->add_flag("--all-pairs", verify_args.all_pairs,
                   "also check generation for disjoint type-set pairs");
  verify->add_option("--out", verify_args.out_path,
                     "also write the JSON report to this file");

  SpectrumArgs spectrum_args;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "compute a spectral certificate for a graph file");
  spectrum->add_option("--in", spectrum_args.in_path, "graph file to check")
      ->required();
  spectrum->add_option("--lambda-target", spectrum_args.lambda_target,
                       "certify every link eigenvalue <= this bound")
      ->required();
  spectrum->add_option("--tolerance", spectrum_args.tolerance,
                       "numerical slack on the bound");
  spectrum->add_option("--jobs", spectrum_args.jobs,
                       "worker threads for link eigenvalues");
  spectrum->add_option("--out", spectrum_args.out_path,
                       "also write the JSON certificate to this file");

  DegreesArgs degrees_args;
  CLI::App* degrees = app.add_subcommand(
      "degrees", "print a closed-form degree profile");
  degrees->add_option("--family", degrees_args.family,
                      "el-base | el-symmetrized | el-adhoc | affine-base | "
                      "affine-3r | affine-adhoc | affine-symmetrized")
      ->required();
  degrees->add_option("--n", degrees_args.n, "dimension (el families)");
  degrees->add_option("--m", degrees_args.m, "strands (affine families)");
  degrees->add_option("--r", degrees_args.r,
                      "spacing (affine-3r, affine-adhoc)");
  degrees->add_option("--q", degrees_args.q, "field size (el families)");
  degrees->add_option("--out", degrees_args.out_path,
                      "also write the JSON profile to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalidParams;
  }

  try {
    if (build->parsed()) return run_build(build_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (spectrum->parsed()) return run_spectrum(spectrum_args);
    return run_degrees(degrees_args);
  } catch (const hrg::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const hrg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }
}
