#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace coarsetr::cli {

using homology::BigInt;

Json big_json(BigInt const& v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
  return v.str();
}

Json matrix_json(homology::Matrix<BigInt> const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(big_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_text(homology::Matrix<BigInt> const& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

std::string torsion_text(homology::AbelianGroup const& a) {
  if (a.torsion.empty()) return "-";
  std::string out;
  for (auto const& t : a.torsion) {
    if (!out.empty()) out += " ";
    out += t.str();
  }
  return out;
}

Json error_json(CliError const& e) {
  Json body = Json::object();
  body["kind"] = kind_name(e.code);
  body["pointer"] = e.pointer;
  body["message"] = e.what();
  Json out = Json::object();
  out["error"] = std::move(body);
  return out;
}

namespace {

std::string csv_cell(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void text_table(std::ostringstream& os, Table const& t) {
  if (!t.title.empty()) os << t.title << "\n";
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (auto const& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  auto line = [&](std::vector<std::string> const& cells) {
    std::string s;
    for (std::size_t c = 0; c < width.size(); ++c) {
      std::string cell = c < cells.size() ? cells[c] : "";
      if (c + 1 < width.size()) cell.resize(width[c], ' ');
      s += (c ? "  " : "") + cell;
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  };
  line(t.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (auto const& row : t.rows) line(row);
}

}  // namespace

std::string render(Output const& out, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << out.json.dump(2) << "\n";
      break;
    case Format::table:
      for (std::size_t i = 0; i < out.tables.size(); ++i) {
        if (i) os << "\n";
        text_table(os, out.tables[i]);
      }
      if (!out.lines.empty() && !out.tables.empty()) os << "\n";
      for (auto const& l : out.lines) os << l << "\n";
      break;
    case Format::csv:
      for (std::size_t i = 0; i < out.tables.size(); ++i) {
        auto const& t = out.tables[i];
        if (i) os << "\n";
        os << "table";
        for (auto const& c : t.columns) os << "," << csv_cell(c);
        os << "\n";
        for (auto const& row : t.rows) {
          os << csv_cell(t.title);
          for (auto const& c : row) os << "," << csv_cell(c);
          os << "\n";
        }
      }
      break;
  }
  return os.str();
}

std::string render_error(CliError const& e, Format format) {
  if (format == Format::json) return error_json(e).dump(2) + "\n";
  std::string where = e.pointer.empty() ? "" : " at " + e.pointer;
  return std::string("error (") + kind_name(e.code) + ")" + where + ": " + e.what() + "\n";
}

}  // namespace coarsetr::cli
