#include "coxk3/json_io.hpp"

#include <sstream>

namespace coxk3::io {

json to_json(const Int& x) { return x.get_str(); }

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error("json: malformed integer string '" + j.get<std::string>() + "'");
    }
  }
  throw Error("json: expected integer or decimal string");
}

json to_json(const IVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

IVec vec_from_json(const json& j) {
  if (!j.is_array()) throw Error("json: expected an array for a vector");
  IVec v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& x : j) v(i++) = int_from_json(x);
  return v;
}

json to_json(const IMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

IMat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("json: expected a nonempty array of rows");
  Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  IMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error("json: ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = int_from_json(row.at(static_cast<size_t>(c)));
  }
  return m;
}

json to_json(const cones::Cone& c) {
  json out;
  out["ambient_dim"] = c.ambient_dim;
  out["pointed"] = c.pointed();
  json rays = json::array();
  for (const IVec& r : c.rays) rays.push_back(to_json(r));
  out["rays"] = rays;
  if (!c.lineality.empty()) {
    json lin = json::array();
    for (const IVec& l : c.lineality) lin.push_back(to_json(l));
    out["lineality"] = lin;
  }
  return out;
}

json to_json(const toric::Fan& f) {
  json out;
  json rays = json::array();
  for (const IVec& r : f.rays) rays.push_back(to_json(r));
  out["rays"] = rays;
  out["max_cones"] = f.max_cones;
  return out;
}

toric::Fan fan_from_json(const json& j) {
  toric::Fan f;
  if (!j.contains("rays") || !j.contains("max_cones"))
    throw Error("json: fan needs 'rays' and 'max_cones'");
  for (const auto& r : j.at("rays")) f.rays.push_back(vec_from_json(r));
  if (f.rays.empty()) throw Error("json: fan has no rays");
  f.lattice_rank = static_cast<int>(f.rays[0].size());
  for (const auto& c : j.at("max_cones")) f.max_cones.push_back(c.get<std::vector<int>>());
  toric::validate(f);
  return f;
}

json to_json(const graded::GradedPresentation& p) {
  json out;
  out["Q"] = to_json(p.q);
  json rels = json::array();
  for (const auto& r : p.relations) {
    json jr;
    if (const auto* poly = std::get_if<Polynomial>(&r)) {
      jr["poly"] = to_string(*poly);
    } else {
      const auto& g = std::get<graded::GenericRelation>(r);
      jr["generic_degree"] = to_json(g.degree);
      jr["label"] = g.label;
    }
    rels.push_back(jr);
  }
  out["relations"] = rels;
  return out;
}

graded::GradedPresentation presentation_from_json(const json& j) {
  graded::GradedPresentation p;
  if (!j.contains("Q")) throw Error("json: presentation needs 'Q'");
  p.q = mat_from_json(j.at("Q"));
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      if (r.contains("poly")) {
        p.relations.emplace_back(
            parse_polynomial(r.at("poly").get<std::string>(), static_cast<int>(p.q.cols())));
      } else if (r.contains("generic_degree")) {
        graded::GenericRelation g;
        g.degree = vec_from_json(r.at("generic_degree"));
        g.label = r.value("label", std::string("generic"));
        p.relations.emplace_back(std::move(g));
      } else {
        throw Error("json: relation needs 'poly' or 'generic_degree'");
      }
    }
  }
  return p;
}

IMat parse_matrix_text(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Int> entries;
    std::stringstream rs(row);
    std::string tok;
    while (rs >> tok) {
      // allow comma-separated as well
      for (char& ch : tok)
        if (ch == ',') ch = ' ';
      std::stringstream ts(tok);
      std::string t2;
      while (ts >> t2) entries.emplace_back(t2);
    }
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw Error("matrix text: empty");
  IMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error("matrix text: ragged rows");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

IVec parse_vector_text(const std::string& text) {
  std::string t = text;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::stringstream ss(t);
  std::vector<Int> entries;
  std::string tok;
  while (ss >> tok) entries.emplace_back(tok);
  if (entries.empty()) throw Error("vector text: empty");
  IVec v(static_cast<Eigen::Index>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
  return v;
}

}  // namespace coxk3::io
