#include "lmi/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "lmi/errors.hpp"

namespace lmi {

Json number_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v == 0.0 ? 0.0 : v;  // no "-0.0"
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(number_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const LmiRegion& r) {
  Json j = Json::object();
  if (!r.name().empty()) j["name"] = r.name();
  j["L"] = to_json(r.l());
  j["M"] = to_json(r.m());
  return j;
}

std::string region_file_text(const LmiRegion& r) {
  std::string text = "{\n";
  if (!r.name().empty()) text += "  \"name\": " + Json(r.name()).dump() + ",\n";
  auto rows = [&](const char* key, const Matrix& m, bool last) {
    text += std::string("  \"") + key + "\": [\n";
    Json j = to_json(m);
    for (std::size_t i = 0; i < j.size(); ++i) text += "    " + j[i].dump() + (i + 1 < j.size() ? ",\n" : "\n");
    text += last ? "  ]\n" : "  ],\n";
  };
  rows("L", r.l(), false);
  rows("M", r.m(), true);
  return text + "}\n";
}

Json to_json(const RealInterval& iv) {
  Json j = Json::object();
  j["empty"] = iv.empty;
  if (!iv.empty) {
    j["lo"] = number_json(iv.lo);
    j["hi"] = number_json(iv.hi);
  }
  return j;
}

Json to_json(const RecessionCone& c) {
  Json j = Json::object();
  j["kind"] = cone_kind_name(c.kind);
  j["angle"] = c.angle ? number_json(*c.angle) : Json(nullptr);
  j["orientation"] = orientation_name(c.orientation);
  return j;
}

Json to_json(const RegionReport& rep) {
  Json j = Json::object();
  j["order"] = rep.order;
  j["empty"] = rep.empty;
  j["bounded"] = rep.bounded;
  j["interval"] = to_json(rep.interval);
  j["lineality"] = rep.lineality ? Json(lineality_name(*rep.lineality)) : Json(nullptr);
  j["recession"] = rep.recession ? to_json(*rep.recession) : Json(nullptr);
  return j;
}

Json to_json(const Disk& d) {
  Json j = Json::object();
  j["center_x"] = number_json(d.center_x);
  j["radius"] = number_json(d.radius);
  return j;
}

Json to_json(const ConeAngleRoutes& routes) {
  Json j = Json::object();
  j["theta"] = number_json(routes.theta);
  j["polar"] = number_json(routes.polar);
  j["congruence"] = number_json(routes.congruence);
  j["m_normal"] = routes.m_normal;
  j["routes_agree"] = routes.routes_agree;
  return j;
}

Json to_json(const OmegaResult& om) {
  Json j = Json::object();
  j["value"] = number_json(om.value);
  j["argmin"] = number_json(om.argmin);
  j["samples"] = om.samples;
  j["grid_lo"] = number_json(om.grid_lo);
  j["grid_hi"] = number_json(om.grid_hi);
  return j;
}

Json to_json(const Inertia& in) {
  Json j = Json::object();
  j["n_pos"] = in.n_pos;
  j["n_neg"] = in.n_neg;
  j["n_zero"] = in.n_zero;
  return j;
}

Json to_json(const ElementaryPiece& p) {
  Json j = Json::object();
  j["kind"] = piece_kind_name(p.kind);
  Json params = Json::array();
  for (double v : p.params()) params.push_back(number_json(v));
  j["params"] = std::move(params);
  return j;
}

Json to_json(const Decomposition& d) {
  Json j = Json::array();
  for (const ElementaryPiece& p : d.pieces) j.push_back(to_json(p));
  return j;
}

Json to_json(const CurveRegion& c) {
  Json j = Json::object();
  j["i"] = c.i;
  j["j"] = c.j;
  j["a11"] = number_json(c.a11);
  j["a22"] = number_json(c.a22);
  j["a13"] = number_json(c.a13);
  j["a33"] = number_json(c.a33);
  j["kind"] = conic_kind_name(c.kind);
  return j;
}

Json to_json(const CurveCensus& c) {
  Json j = Json::object();
  j["elliptic"] = c.elliptic;
  j["hyperbolic_or_pair"] = c.hyperbolic_or_pair;
  j["parabolic"] = c.parabolic;
  j["degenerate"] = c.degenerate;
  j["inertia"] = to_json(c.inertia);
  j["elliptic_bound"] = c.elliptic_bound;
  j["hyperbolic_bound"] = c.hyperbolic_bound;
  j["parabolic_reference"] = c.parabolic_reference;
  j["bounds_hold"] = c.bounds_hold;
  Json curves = Json::array();
  for (const CurveRegion& cr : c.curves) curves.push_back(to_json(cr));
  j["curves"] = std::move(curves);
  return j;
}

Matrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::ShapeError, "field " + field + ": expected a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw Error(ErrorCode::ShapeError, "field " + where + ": expected an array");
    if (row.size() != j[0].size())
      throw Error(ErrorCode::ShapeError, "field " + where + ": has " + std::to_string(row.size()) +
                                             " entries, row 0 has " + std::to_string(j[0].size()));
    std::vector<double> vals;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number())
        throw Error(ErrorCode::ShapeError, "field " + where + "[" + std::to_string(k) + "]: expected a number");
      double v = row[k].get<double>();
      if (!std::isfinite(v))
        throw Error(ErrorCode::ShapeError, "field " + where + "[" + std::to_string(k) + "]: not finite");
      vals.push_back(v);
    }
    rows.push_back(std::move(vals));
  }
  if (rows[0].empty()) throw Error(ErrorCode::ShapeError, "field " + field + ": rows are empty");
  return Matrix::from_rows(rows);
}

LmiRegion region_from_json(const Json& j, const ToleranceConfig& cfg) {
  if (!j.is_object()) throw Error(ErrorCode::ShapeError, "region: expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "name" && it.key() != "L" && it.key() != "M")
      throw Error(ErrorCode::ShapeError, "field " + it.key() + ": unknown key");
  if (!j.contains("L")) throw Error(ErrorCode::ShapeError, "field L: missing");
  if (!j.contains("M")) throw Error(ErrorCode::ShapeError, "field M: missing");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorCode::ShapeError, "field name: expected a string");
    name = j["name"].get<std::string>();
  }
  Matrix l = matrix_from_json(j["L"], "L");
  Matrix m = matrix_from_json(j["M"], "M");
  if (!l.square())
    throw Error(ErrorCode::ShapeError, "field L: not square (" + std::to_string(l.rows()) + "x" +
                                           std::to_string(l.cols()) + ")");
  if (!m.square())
    throw Error(ErrorCode::ShapeError, "field M: not square (" + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()) + ")");
  if (m.rows() != l.rows())
    throw Error(ErrorCode::ShapeError, "field M: order " + std::to_string(m.rows()) + " does not match L order " +
                                           std::to_string(l.rows()));
  try {
    return LmiRegion(l, m, cfg, name);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSymmetricL)
      throw Error(ErrorCode::NotSymmetricL, "field L: not symmetric within tolerance");
    throw;
  }
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

LmiRegion parse_region_text(const std::string& text, const ToleranceConfig& cfg, const std::string& source) {
  Json j = parse_json_text(text, source);
  try {
    return region_from_json(j, cfg);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ShapeError || e.code() == ErrorCode::NotSymmetricL) {
      std::string msg = e.what();
      const std::string prefix = std::string(error_name(e.code())) + ": ";
      if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
      throw Error(e.code(), source + ": " + msg);
    }
    throw;
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorCode::IoError, "failed writing " + path);
}

LmiRegion parse_region_file(const std::string& path, const ToleranceConfig& cfg) {
  return parse_region_text(read_text_file(path), cfg, path);
}

}  // namespace lmi
