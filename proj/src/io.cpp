// SPDX-License-Identifier: Apache-2.0

#include "ccm/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ccm::io {
namespace {

using nlohmann::json;

json square_array(std::size_t n, const json &value, const char *name) {
  if (!value.is_array() || value.size() != n)
    throw InputError(std::string("matrix file: '") + name + "' must be an " +
                     std::to_string(n) + "x" + std::to_string(n) + " array");
  for (std::size_t i = 0; i < n; ++i) {
    const json &row = value[i];
    if (!row.is_array() || row.size() != n)
      throw InputError(std::string("matrix file: row ") + std::to_string(i) +
                       " of '" + name + "' must have " + std::to_string(n) +
                       " entries");
    for (const json &v : row)
      if (!v.is_number())
        throw InputError(std::string("matrix file: '") + name +
                         "' contains a non-numeric entry in row " +
                         std::to_string(i));
  }
  return value;
}

json optional_number(const std::optional<double> &v) {
  return v ? json(*v) : json(nullptr);
}

} // namespace

MatrixFile MatrixFile::from_instance(const ProblemInstance &p) {
  return MatrixFile{p.a, p.label, p.generator, p.parameters};
}

std::string serialize_matrix(const MatrixFile &m) {
  const std::size_t n = m.a.dim();
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json re_row = json::array(), im_row = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      re_row.push_back(m.a(i, k).real());
      im_row.push_back(m.a(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json doc = {
      {"format", kMatrixFormat},
      {"version", kMatrixVersion},
      {"n", n},
      {"label", m.label},
      {"provenance", {{"generator", m.generator}, {"parameters", m.parameters}}},
      {"re", std::move(re)},
      {"im", std::move(im)},
  };
  return doc.dump(1) + "\n";
}

MatrixFile parse_matrix(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("matrix file: not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw InputError("matrix file: top level must be an object");
  if (doc.value("format", "") != kMatrixFormat)
    throw InputError(std::string("matrix file: 'format' must be \"") +
                     kMatrixFormat + "\"");
  if (!doc.contains("version") || doc["version"] != kMatrixVersion)
    throw InputError("matrix file: unsupported 'version'");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() ||
      doc["n"].get<std::size_t>() == 0)
    throw InputError("matrix file: 'n' must be a positive integer");
  const auto n = doc["n"].get<std::size_t>();
  if (!doc.contains("re") || !doc.contains("im"))
    throw InputError("matrix file: 're' and 'im' arrays are required");
  const json re = square_array(n, doc["re"], "re");
  const json im = square_array(n, doc["im"], "im");

  std::vector<cplx> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      entries[i * n + k] =
          cplx(re[i][k].get<double>(), im[i][k].get<double>());

  MatrixFile out{HermitianMatrix::identity(1), {}, {}, {}};
  try {
    out.a = HermitianMatrix(n, std::move(entries));
  } catch (const std::exception &e) {
    throw InputError(std::string("matrix file: ") + e.what());
  }
  if (doc.contains("label") && doc["label"].is_string())
    out.label = doc["label"].get<std::string>();
  if (doc.contains("provenance") && doc["provenance"].is_object()) {
    const json &prov = doc["provenance"];
    if (prov.contains("generator") && prov["generator"].is_string())
      out.generator = prov["generator"].get<std::string>();
    if (prov.contains("parameters") && prov["parameters"].is_object())
      for (const auto &[key, value] : prov["parameters"].items())
        out.parameters[key] =
            value.is_string() ? value.get<std::string>() : value.dump();
  }
  return out;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw InputError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out)
    throw InputError("failed writing '" + path.string() + "'");
}

void write_matrix(const MatrixFile &m, const std::filesystem::path &path) {
  write_text(path, serialize_matrix(m));
}

MatrixFile read_matrix(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open matrix file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

std::string serialize_report(const RunReport &r) {
  json trace = json::array();
  for (const IterationRecord &rec : r.trace)
    trace.push_back({{"iter", rec.iter},
                     {"cost", rec.cost},
                     {"grad_norm", rec.grad_norm},
                     {"step", rec.step},
                     {"backtracks", rec.backtracks}});
  json doc = {
      {"format", kReportFormat},
      {"instance", r.instance},
      {"seed", r.seed},
      {"config",
       {{"max_iters", r.config.max_iters},
        {"grad_tol", r.config.grad_tol},
        {"initial_step", optional_number(r.config.initial_step)},
        {"armijo_c", r.config.armijo_c},
        {"backtrack_factor", r.config.backtrack_factor},
        {"max_backtracks", r.config.max_backtracks}}},
      {"status", r.status},
      {"cost_final", optional_number(r.cost_final)},
      {"grad_norm_final", optional_number(r.grad_norm_final)},
      {"iterations",
       r.iterations ? json(*r.iterations) : json(nullptr)},
      {"trace", std::move(trace)},
      {"wall_time_s", r.wall_time_s},
      {"kernel_backend", r.kernel_backend},
      {"error", r.error ? json(*r.error) : json(nullptr)},
  };
  return doc.dump(1) + "\n";
}

void write_report(const RunReport &r, const std::filesystem::path &path) {
  write_text(path, serialize_report(r));
}

std::string trace_csv(const std::vector<IterationRecord> &trace) {
  std::ostringstream out;
  out.precision(17);
  out << "iter,cost,grad_norm,step,backtracks\n";
  for (const IterationRecord &rec : trace)
    out << rec.iter << ',' << rec.cost << ',' << rec.grad_norm << ','
        << rec.step << ',' << rec.backtracks << '\n';
  return out.str();
}

} // namespace ccm::io
