#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamma/analysis.hpp"
#include "gamma/errors.hpp"
#include "gamma/suites.hpp"
#include "gamma/zpfamily.hpp"

namespace {

using nlohmann::json;

gam::Fel parse_alpha(const std::string& s) {
  std::size_t used = 0;
  const unsigned long v = std::stoul(s, &used, 0);
  if (used != s.size()) throw gam::ParseError("bad alpha '" + s + "'");
  return gam::Fel(v);
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  if (!out) throw gam::IoError("cannot write " + path);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int run(int argc, char** argv) {
  CLI::App app{"coset-graph construction and verification tool"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand

  gam::SuiteOptions opt;
  bool json_flag = false;
  std::string json_path;
  app.add_option("--threads", opt.threads,
                 "worker threads (results are identical for any value)");
  app.add_option("--seed", opt.seed, "seed for sampled cross-checks");
  app.add_flag("--deep", opt.deep, "enable long-running checks");
  auto* json_opt = app.add_option("--json", json_path,
                                  "write a JSON report to this path");
  app.add_flag("--json-stdout", json_flag, "print the JSON report to stdout");

  std::string field_spec = "f=3";
  std::string alpha_str = "0x0";
  std::string out_path;
  std::string suite_name;
  int prime = 7;
  bool want_girth = false, want_diameter = false, want_quotient = false,
       want_antipodal = false;
  std::vector<std::string> arc_specs;

  auto* info = app.add_subcommand("field-info", "describe a field GF(2^f)");
  info->add_option("--field", field_spec, "field spec f=<n>[,poly=0x..]")
      ->required();

  auto* cons = app.add_subcommand("construct",
                                  "build the base component of Gamma(f,alpha)");
  cons->add_option("--field", field_spec)->required();
  cons->add_option("--alpha", alpha_str)->required();
  cons->add_option("--out", out_path, "edge-list output path (default stdout)");

  auto* ana = app.add_subcommand("analyze", "analyze Gamma(f,alpha)");
  ana->add_option("--field", field_spec)->required();
  ana->add_option("--alpha", alpha_str)->required();
  ana->add_flag("--girth", want_girth);
  ana->add_flag("--diameter", want_diameter);
  ana->add_flag("--quotient", want_quotient);
  ana->add_flag("--antipodal", want_antipodal);
  ana->add_option("--arcs", arc_specs,
                  "s=<n>,group=<G|Gplus|M|A|Aplus> (repeatable)");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite_name, "one of: field group construction "
                                         "f1 f2 f3 f4 f5-classes zp "
                                         "determinism, or 'all'")
      ->required();

  auto* iso = app.add_subcommand("iso-classes",
                                 "isomorphism classes of connected alphas");
  iso->add_option("--field", field_spec)->required();

  auto* zp = app.add_subcommand("zp-family", "the Z_p x Z_p x Z_2 family");
  zp->add_option("--p", prime, "prime = 1 mod 3")->required();

  auto* exp = app.add_subcommand("export", "write the component edge list");
  exp->add_option("--field", field_spec)->required();
  exp->add_option("--alpha", alpha_str)->required();
  exp->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (*json_opt) json_flag = true;

  if (info->parsed()) {
    const gam::Field F = gam::Field::parse(field_spec);
    json j{{"field", F.spec_string()},
           {"order", F.order()},
           {"fel_bytes", F.fel_bytes()}};
    std::uint64_t gens = 0;
    for (gam::Fel a = 0; a < F.order(); ++a) gens += F.is_generator(a);
    j["generators"] = gens;
    if (F.degree() >= 2) {
      const auto conn = F.connected_alphas();
      j["connected_alphas"] = json::array();
      for (gam::Fel a : conn)
        j["connected_alphas"].push_back("0x" + F.to_hex(a));
    }
    if (json_flag) {
      emit(j, json_path);
    } else {
      std::cout << F.spec_string() << ": order " << F.order() << ", "
                << gens << " generators";
      if (F.degree() >= 2)
        std::cout << ", " << F.connected_alphas().size()
                  << " connected alphas";
      std::cout << "\n";
    }
    return 0;
  }

  if (cons->parsed() || exp->parsed()) {
    const gam::Field F = gam::Field::parse(field_spec);
    const gam::Graph g = gam::build_component(F, parse_alpha(alpha_str));
    if (out_path.empty()) {
      gam::export_edges(g, std::cout);
    } else {
      std::ofstream out(out_path);
      gam::export_edges(g, out);
      if (!out) throw gam::IoError("cannot write " + out_path);
      std::cerr << "wrote " << g.num_vertices() << " vertices, "
                << g.num_edges() << " edges to " << out_path << "\n";
    }
    return 0;
  }

  if (ana->parsed()) {
    const gam::Field F = gam::Field::parse(field_spec);
    const gam::Fel alpha = parse_alpha(alpha_str);
    Timer total;
    const gam::Graph g = gam::build_component(F, alpha);
    json j{{"field", F.spec_string()},
           {"alpha", "0x" + F.to_hex(alpha)},
           {"vertices", g.num_vertices()},
           {"edges", g.num_edges()},
           {"connected",
            g.num_vertices() == gam::total_vertices(F)},
           {"components", gam::component_count(F, alpha, &g)}};
    json timings{{"build", total.ms()}};
    if (want_girth) {
      Timer t;
      j["girth"] = gam::girth(g, 8, opt.seed);
      timings["girth"] = t.ms();
    }
    if (want_diameter) {
      Timer t;
      j["diameter"] = gam::diameter(g);
      timings["diameter"] = t.ms();
    }
    if (!arc_specs.empty()) j["arcs"] = json::array();
    for (const std::string& spec : arc_specs) {
      int s = 0;
      char group[16] = {0};
      if (std::sscanf(spec.c_str(), "s=%d,group=%15s", &s, group) != 2)
        throw gam::ParseError("bad --arcs '" + spec + "'");
      Timer t;
      const auto gens = gam::automorphism_gens(g, group);
      json a{{"s", s}, {"group", group}};
      const bool local = std::string(group) == "Gplus" ||
                         std::string(group) == "Aplus";
      if (local) {
        const auto rep = gam::local_arc_orbits(g, gens, s);
        a["local"] = true;
        a["transitive"] = rep[0].transitive && rep[1].transitive;
        a["orbit_sizes"] = {rep[0].orbit_size, rep[1].orbit_size};
        a["total_per_part"] = rep[0].total;
      } else {
        const auto rep = gam::arc_orbits(g, gens, s);
        a["local"] = false;
        a["transitive"] = rep.transitive;
        a["orbit_size"] = rep.orbit_size;
        a["total"] = rep.total;
      }
      a["ms"] = t.ms();
      j["arcs"].push_back(std::move(a));
    }
    if (want_quotient) {
      Timer t;
      const auto q = gam::quotient_by_second_factor(g);
      j["quotient"] = {{"vertices", q.vertices},
                       {"edges", q.edges},
                       {"part_sizes", {q.part_size[0], q.part_size[1]}},
                       {"cubic", q.cubic},
                       {"cover_ok", q.cover_ok}};
      timings["quotient"] = t.ms();
    }
    if (want_antipodal) {
      Timer t;
      j["antipodal"] = gam::antipodal_check(g);
      timings["antipodal"] = t.ms();
    }
    timings["total"] = total.ms();
    j["timings_ms"] = std::move(timings);
    emit(j, json_path);
    return 0;
  }

  if (ver->parsed()) {
    std::vector<std::string> names;
    if (suite_name == "all") {
      names = gam::suite_names();
    } else {
      names.push_back(suite_name);
    }
    json all = json::array();
    bool ok = true;
    for (const std::string& n : names) {
      const gam::SuiteResult res = gam::run_suite(n, opt);
      res.print(std::cout);
      all.push_back(res.to_json(true));
      ok = ok && res.all_pass();
    }
    if (json_flag) emit(all.size() == 1 ? all[0] : all, json_path);
    return ok ? 0 : 1;
  }

  if (iso->parsed()) {
    const gam::Field F = gam::Field::parse(field_spec);
    const auto cls = gam::iso_classes(F);
    json j{{"field", F.spec_string()}, {"classes", json::array()}};
    for (const auto& c : cls) {
      json cj = json::array();
      for (gam::Fel a : c) cj.push_back("0x" + F.to_hex(a));
      j["classes"].push_back(std::move(cj));
    }
    if (json_flag) {
      emit(j, json_path);
    } else {
      std::cout << cls.size() << " classes of sizes:";
      for (const auto& c : cls) std::cout << " " << c.size();
      std::cout << "\n";
    }
    return 0;
  }

  if (zp->parsed()) {
    const gam::ZpReport z = gam::zp_arc_check(prime);
    json j{{"p", z.p},
           {"a", z.a},
           {"vertices", z.vertices},
           {"edges", z.edges},
           {"half_sizes", {z.half_size[0], z.half_size[1]}},
           {"girth", z.girth},
           {"same_graph_other_root", z.same_graph_other_root},
           {"G_1arc_transitive", z.g_arc1.transitive},
           {"G_2arc_transitive", z.g_arc2.transitive},
           {"A_2arc_transitive", z.a_arc2.transitive},
           {"row_orbits_per_half",
            {z.row_orbits_per_half[0], z.row_orbits_per_half[1]}},
           {"aut_order", z.aut_order},
           {"stabilizer_order", z.stabilizer_order},
           {"pass", z.pass()}};
    if (json_flag) {
      emit(j, json_path);
    } else {
      std::cout << "Sigma_" << z.p << ": " << z.vertices << " vertices, girth "
                << z.girth << ", G 1-arc " << (z.g_arc1.transitive ? "yes" : "no")
                << ", G 2-arc " << (z.g_arc2.transitive ? "yes" : "no")
                << ", A 2-arc " << (z.a_arc2.transitive ? "yes" : "no")
                << ", stabilizer " << z.stabilizer_order
                << (z.pass() ? " -- pass" : " -- FAIL") << "\n";
    }
    return z.pass() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gam::CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const gam::UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const gam::UnknownName& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const gam::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const gam::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
