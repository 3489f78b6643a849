// Copyright 2026 The qramsey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qramsey/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qramsey/errors.hpp"
#include "qramsey/io.hpp"

namespace qramsey::cli {

namespace {

struct Common {
  std::uint64_t seed = 0;
  double tol = kCertificateTol;
  int restarts = SolverOptions{}.restarts;
  int workers = 1;
  bool split = false;
  std::string out_path;
  std::string graph_path;

  SolverOptions options() const {
    SolverOptions o;
    o.tol = tol;
    o.clique_tol = kCertificateTol;
    o.restarts = restarts;
    o.workers = workers;
    return o;
  }
};

void add_search_flags(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--tol", c.tol, "relative residual tolerance")->capture_default_str();
  sub->add_option("--restarts", c.restarts, "random restarts / trials")->capture_default_str();
  sub->add_option("--workers", c.workers, "threads for independent restarts")->capture_default_str();
}

void add_graph_flags(CLI::App* sub, Common& c) {
  sub->add_option("--graph", c.graph_path, "graph JSON file")->required();
  sub->add_flag("--split", c.split, "split non-Hermitian generators into Hermitian parts");
}

void add_out_flag(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_path, "write the JSON/CSV result here instead of stdout");
}

// Text goes to --out when given, otherwise to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw BadParameters("cannot write " + path);
  f << text;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

OperatorSystem load_graph(const Common& c) {
  return graph_from_json(read_json_file(c.graph_path), c.split);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cliques and anticliques of quantum graphs (operator systems in M_n)", "qramsey"};
  app.require_subcommand(1);
  std::function<void()> action;
  Common c;

  // gen
  std::string kind;
  Eigen::Index gen_n = 0;
  int gen_d = 0;
  int gen_m = 0;
  std::vector<int> sizes;
  auto* gen = app.add_subcommand("gen", "write a graph file");
  gen->add_option("kind", kind, "random | block | turan")
      ->required()
      ->check(CLI::IsMember({"random", "block", "turan"}));
  gen->add_option("--n", gen_n, "matrix size");
  gen->add_option("--d", gen_d, "dimension (random)");
  gen->add_option("--m", gen_m, "anticlique rank bound (turan)");
  gen->add_option("--sizes", sizes, "comma-separated block sizes (block)")->delimiter(',');
  gen->add_option("--seed", c.seed, "random seed")->capture_default_str();
  add_out_flag(gen, c);
  gen->callback([&] {
    action = [&] {
      OperatorSystem v = [&] {
        if (kind == "random") {
          if (gen_n < 1 || gen_d < 1) throw BadParameters("gen random needs --n and --d");
          return random_graph(gen_n, gen_d, c.seed);
        }
        if (kind == "block") {
          if (sizes.empty()) throw BadParameters("gen block needs --sizes");
          return block_identity_graph(sizes);
        }
        if (gen_n < 1 || gen_m < 1) throw BadParameters("gen turan needs --n and --m");
        return turan_witness(static_cast<int>(gen_n), gen_m).system;
      }();
      emit(dump(graph_to_json(v)), c.out_path, out);
    };
  });

  // anticlique
  int k = 0;
  std::string method = "dim3";
  auto* anti = app.add_subcommand("anticlique", "find and verify a k-anticlique");
  add_graph_flags(anti, c);
  anti->add_option("--k", k, "anticlique rank")->required();
  anti->add_option("--method", method, "dim3 | recursive")
      ->check(CLI::IsMember({"dim3", "recursive"}))
      ->capture_default_str();
  add_search_flags(anti, c);
  add_out_flag(anti, c);
  anti->callback([&] {
    action = [&] {
      const OperatorSystem v = load_graph(c);
      const auto cert = method == "dim3" ? anticlique_dim3(v, k, c.seed, c.options())
                                         : anticlique_recursive(v, k, c.seed, c.options());
      out << "ANTICLIQUE residual=" << fmt_double(cert.residual) << "\n";
      emit(dump(to_json(cert)), c.out_path, out);
    };
  });

  // clique2
  auto* clique = app.add_subcommand("clique2", "find and verify a 2-clique");
  add_graph_flags(clique, c);
  add_search_flags(clique, c);
  add_out_flag(clique, c);
  clique->callback([&] {
    action = [&] {
      const auto cert = find_2clique(load_graph(c), c.seed, c.options());
      out << "CLIQUE sigma4=" << fmt_double(cert.gram_sigma_min) << "\n";
      emit(dump(to_json(cert)), c.out_path, out);
    };
  });

  // decide
  auto* decide = app.add_subcommand("decide", "2-clique or k-anticlique for n >= 3k-2");
  add_graph_flags(decide, c);
  decide->add_option("--k", k, "anticlique rank")->required();
  add_search_flags(decide, c);
  add_out_flag(decide, c);
  decide->callback([&] {
    action = [&] {
      const RamseyOutcome outcome = qr2k_decide(load_graph(c), k, c.seed, c.options());
      std::visit(
          [&](const auto& cert) {
            using T = std::decay_t<decltype(cert)>;
            out << (std::is_same_v<T, CliqueCertificate> ? "CLIQUE" : "ANTICLIQUE") << "\n";
            emit(dump(to_json(cert)), c.out_path, out);
          },
          outcome);
    };
  });

  // nrange
  std::string matrix_path;
  int angles = SolverOptions{}.num_angles;
  auto* nrange = app.add_subcommand("nrange", "outer polygon of the rank-k numerical range as CSV");
  auto* matrix_opt = nrange->add_option("--matrix", matrix_path, "matrix JSON {\"re\", \"im\"}");
  auto* graph_opt = nrange->add_option("--graph", c.graph_path, "use A = G1 + i G2 from a graph file");
  matrix_opt->excludes(graph_opt);
  nrange->add_option("--k", k, "rank")->required();
  nrange->add_option("--angles", angles, "number of support angles")->capture_default_str();
  add_out_flag(nrange, c);
  nrange->callback([&] {
    action = [&] {
      ComplexMatrix a;
      if (!matrix_path.empty()) {
        a = matrix_from_json(read_json_file(matrix_path));
      } else if (!c.graph_path.empty()) {
        const OperatorSystem v = load_graph(c);
        a = ComplexMatrix::Zero(v.n(), v.n());
        if (v.generators().size() > 1) a += v.generators()[1].matrix();
        if (v.generators().size() > 2) a += Complex(0.0, 1.0) * v.generators()[2].matrix();
      } else {
        throw BadParameters("nrange needs --matrix or --graph");
      }
      std::ostringstream csv;
      write_polygon_csv(csv, outer_polygon(a, k, angles));
      emit(csv.str(), c.out_path, out);
    };
  });

  // bounds
  std::vector<int> ds;
  std::vector<int> ks;
  auto* bounds = app.add_subcommand("bounds", "anticlique existence bounds as a JSON table");
  bounds->add_option("--d", ds, "comma-separated dimensions")->required()->delimiter(',');
  bounds->add_option("--k", ks, "comma-separated anticlique ranks")->required()->delimiter(',');
  add_out_flag(bounds, c);
  bounds->callback([&] {
    action = [&] {
      Json rows = Json::array();
      for (int d : ds)
        for (int kk : ks) rows.push_back(to_json(anticlique_bound(d, kk)));
      emit(dump(rows), c.out_path, out);
    };
  });

  // turan-check
  int tn = 0;
  int tm = 0;
  int trials = 100;
  auto* turan = app.add_subcommand("turan-check", "Turán witness plus the random lower-bound sweep");
  turan->add_option("--n", tn, "matrix size")->required();
  turan->add_option("--m", tm, "anticliques of rank m+1 are excluded")->required();
  turan->add_option("--trials", trials, "random systems in the sweep")->capture_default_str();
  add_search_flags(turan, c);
  add_out_flag(turan, c);
  turan->callback([&] {
    action = [&] {
      const TuranWitness w = turan_witness(tn, tm);
      Json report{{"n", tn},
                  {"m", tm},
                  {"upper_witness", {{"dim", w.system.dim()}, {"proof", to_json(w.proof)}}},
                  {"sweep", nullptr}};
      bool ok = true;
      std::string sweep_note = "skipped (needs n > 3m)";
      if (tn > 3 * tm) {
        const SweepReport r = turan_lower_sweep(tn, tm, trials, c.seed, c.options());
        report["sweep"] = to_json(r);
        ok = r.successes == r.trials;
        sweep_note = std::to_string(r.successes) + "/" + std::to_string(r.trials);
      }
      out << "TURAN upper_dim=" << w.system.dim() << " sweep=" << sweep_note << "\n";
      emit(dump(report), c.out_path, out);
      if (!ok) throw SearchFailed("lower-bound sweep had failures", 0.0);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalFailure& e) {
    err << "search failed: " << e.what() << "\n";
    return kSearchFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qramsey::cli
