#include "mcl/serialization.hpp"

#include <cstdio>
#include <stdexcept>

namespace mcl {

nlohmann::json to_json(const MclElement& m) {
  nlohmann::json j;
  j["modulus"] = m.modulus().n();
  if (m.is_bottom()) {
    j["bottom"] = true;
    j["indices"] = m.indices();
    return j;
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const Entry& e : m.entries()) {
    if (e.is_x()) {
      entries.push_back("X");
    } else {
      entries.push_back(e.value());
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

MclElement element_from_json(const nlohmann::json& j) {
  const Modulus modulus(j.at("modulus").get<int>());
  if (j.value("bottom", false)) {
    return MclElement::bottom(modulus, IndexSet(j.value("indices", 1)));
  }
  std::vector<Entry> entries;
  for (const auto& e : j.at("entries")) {
    if (e.is_string()) {
      if (e.get<std::string>() != "X") {
        throw std::invalid_argument("element_from_json: unknown entry tag");
      }
      entries.push_back(Entry::x());
    } else {
      entries.push_back(Entry::value(e.get<int>()));
    }
  }
  return MclElement(modulus, std::move(entries));
}

nlohmann::json to_json(const Perm& p) { return nlohmann::json(p.images()); }

Perm perm_from_json(const nlohmann::json& j) {
  return Perm(j.get<std::vector<int>>());
}

nlohmann::json to_json(const WreathElement& w) {
  nlohmann::json base = nlohmann::json::array();
  for (const Perm& b : w.base()) base.push_back(to_json(b));
  return nlohmann::json{{"base", std::move(base)}, {"top", to_json(w.top())}};
}

WreathElement wreath_from_json(const nlohmann::json& j) {
  std::vector<Perm> base;
  for (const auto& b : j.at("base")) base.push_back(perm_from_json(b));
  return WreathElement(std::move(base), perm_from_json(j.at("top")));
}

namespace {

void append_real(std::string& out, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out += buf;
}

}  // namespace

std::string matrix_to_json_string(const CMatrix& m) {
  std::string out = "{\"rows\":" + std::to_string(m.rows()) +
                    ",\"cols\":" + std::to_string(m.cols()) + ",\"data\":[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += '[';
      append_real(out, m(i, j).real());
      out += ',';
      append_real(out, m(i, j).imag());
      out += ']';
    }
    out += ']';
  }
  out += "]}";
  return out;
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows) {
    throw std::invalid_argument("matrix_from_json: row count mismatch");
  }
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = data[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix_from_json: column count mismatch");
    }
    for (Eigen::Index jx = 0; jx < cols; ++jx) {
      const auto& cell = row[static_cast<std::size_t>(jx)];
      m(i, jx) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace mcl
