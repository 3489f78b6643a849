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

#include "qramsey/io.hpp"

#include <fstream>
#include <sstream>

#include "qramsey/errors.hpp"

namespace qramsey {

namespace {

Json real_rows(const ComplexMatrix& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix parse_rows(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw SchemaError(std::string(what) + " must be a non-empty 2-D array");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw SchemaError(std::string(what) + " rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  RealMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw SchemaError(std::string(what) + " is ragged");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) throw SchemaError(std::string(what) + " has a non-numeric entry");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j[r][c].get<double>();
    }
  }
  return m;
}

Json doubles(const std::vector<double>& xs) { return Json(xs); }

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  return Json{{"re", real_rows(m, false)}, {"im", real_rows(m, true)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re")) throw SchemaError("matrix must be an object with \"re\"");
  const RealMatrix re = parse_rows(j.at("re"), "re");
  RealMatrix im = RealMatrix::Zero(re.rows(), re.cols());
  if (j.contains("im")) {
    im = parse_rows(j.at("im"), "im");
    if (im.rows() != re.rows() || im.cols() != re.cols()) throw SchemaError("re and im shapes differ");
  }
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

Json graph_to_json(const OperatorSystem& v) {
  Json gens = Json::array();
  for (std::size_t i = 1; i < v.generators().size(); ++i) gens.push_back(matrix_to_json(v.generators()[i]));
  return Json{{"n", v.n()}, {"generators", std::move(gens)}};
}

OperatorSystem graph_from_json(const Json& j, bool split_nonhermitian) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw SchemaError("graph file needs an integer \"n\"");
  }
  const auto n = j.at("n").get<long long>();
  if (n < 1) throw SchemaError("\"n\" must be positive");
  if (!j.contains("generators") || !j.at("generators").is_array()) {
    throw SchemaError("graph file needs a \"generators\" array");
  }
  std::vector<HermitianMatrix> hs;
  for (const Json& g : j.at("generators")) {
    const ComplexMatrix m = matrix_from_json(g);
    if (m.rows() != n || m.cols() != n) {
      std::ostringstream os;
      os << "generator is " << m.rows() << "x" << m.cols() << ", expected " << n << "x" << n;
      throw DimensionMismatch(os.str());
    }
    if (split_nonhermitian && !is_hermitian(m)) {
      auto [re, im] = hermitian_split(m);
      hs.push_back(std::move(re));
      hs.push_back(std::move(im));
    } else {
      hs.emplace_back(m);
    }
  }
  return detect_block_structure(make_graph(static_cast<Eigen::Index>(n), hs));
}

Json to_json(const AnticliqueCertificate& c) {
  return Json{{"kind", "anticlique"},
              {"n", c.isometry.n()},
              {"k", c.isometry.k()},
              {"isometry", matrix_to_json(c.isometry.matrix())},
              {"scalars", doubles(c.scalars)},
              {"residual", c.residual}};
}

Json to_json(const CliqueCertificate& c) {
  return Json{{"kind", "clique"},
              {"n", c.isometry.n()},
              {"k", c.isometry.k()},
              {"isometry", matrix_to_json(c.isometry.matrix())},
              {"gram_sigma_min", c.gram_sigma_min}};
}

Json to_json(const NoAnticliqueProof& p) {
  return Json{{"kind", "no_anticlique"},
              {"k", p.k},
              {"block_ranks", p.block_ranks},
              {"argument", {{"sum_to_identity", p.sum_to_identity}, {"max_block_rank", p.max_block_rank}}}};
}

Json to_json(const SweepReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"trials", r.trials},
              {"seed", r.seed},
              {"successes", r.successes},
              {"failed_trials", r.failed_trials},
              {"residual",
               {{"min", r.residual_min},
                {"median", r.residual_median},
                {"p90", r.residual_p90},
                {"max", r.residual_max}}}};
}

Json to_json(const BoundRow& r) {
  Json row{{"d", r.d}, {"k", r.k}, {"n_thm8", r.n_thm8}};
  row["n_weaver"] = r.n_weaver ? Json(*r.n_weaver) : Json(nullptr);
  return row;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qramsey
