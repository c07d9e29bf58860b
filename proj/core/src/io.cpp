#include "polybisim/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "polybisim/error.hpp"
#include "polybisim/ltl.hpp"

namespace polybisim {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformed, what); }

Rational number(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      malformed(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_number()) malformed(where + ": write non-integer numbers as strings to keep them exact");
  malformed(where + ": expected a number");
}

const json& field(const json& obj, const char* key) {
  if (!obj.contains(key)) malformed(std::string("missing key '") + key + "'");
  return obj.at(key);
}

Vector vector_of(const json& j, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix matrix_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) malformed(where + ": expected a non-empty array of rows");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    rows.push_back(vector_of(j[r], where + "[" + std::to_string(r) + "]"));
    if (rows.back().size() != rows.front().size() || rows.back().empty()) {
      throw Error(ErrorCode::kDimension, where + ": rows have different lengths");
    }
  }
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::string cell_line(BlockId id, const Cell& cell) {
  std::ostringstream out;
  out << "cell " << id << ":";
  bool first = true;
  for (const auto& con : cell.constraints()) {
    out << (first ? " " : " ; ");
    first = false;
    for (const auto& a : con.normal) out << to_string(a) << ' ';
    out << (con.strict ? "<" : "<=") << ' ' << to_string(con.offset);
  }
  return out.str();
}

}  // namespace

Workspace ProblemSpec::workspace() const {
  return Workspace(LinearSystem(A), PolyhedralLF(L, rho), gamma_d, gamma_x, regions);
}

ProblemSpec parse_problem(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("problem file must be a JSON object");

  ProblemSpec spec;
  spec.A = matrix_of(field(doc, "A"), "A");
  spec.L = matrix_of(field(doc, "L"), "L");
  spec.rho = number(field(doc, "rho"), "rho");
  spec.gamma_d = number(field(doc, "gamma_D"), "gamma_D");
  spec.gamma_x = number(field(doc, "gamma_X"), "gamma_X");

  if (doc.contains("regions")) {
    const json& regions = doc.at("regions");
    if (!regions.is_array()) malformed("regions: expected an array");
    for (std::size_t i = 0; i < regions.size(); ++i) {
      const json& r = regions[i];
      const std::string where = "regions[" + std::to_string(i) + "]";
      if (!r.is_object()) malformed(where + ": expected an object");
      const json& name = field(r, "name");
      if (!name.is_string()) malformed(where + ".name: expected a string");
      const Matrix H = matrix_of(field(r, "H"), where + ".H");
      const Vector h = vector_of(field(r, "h"), where + ".h");
      if (h.size() != H.rows()) throw Error(ErrorCode::kDimension, where + ": H and h disagree");
      spec.regions.push_back({name.get<std::string>(), Cell::from_halfspaces(H, h)});
    }
  }

  if (doc.contains("formula")) {
    if (!doc.at("formula").is_string()) malformed("formula: expected a string");
    spec.formula = doc.at("formula").get<std::string>();
  }

  if (doc.contains("options")) {
    const json& o = doc.at("options");
    if (!o.is_object()) malformed("options: expected an object");
    try {
      if (o.contains("sample_count")) spec.options.sample_count = o.at("sample_count").get<std::size_t>();
      if (o.contains("out_dir")) spec.options.out_dir = o.at("out_dir").get<std::string>();
      if (o.contains("svg")) spec.options.svg = o.at("svg").get<bool>();
      if (o.contains("seed")) spec.options.seed = o.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
      malformed(std::string("options: ") + e.what());
    }
  }

  // Building the workspace runs the dimension, rank, rho, level and region checks.
  const Workspace ws = spec.workspace();
  if (!spec.formula.empty()) {
    std::vector<std::string> alphabet{kTargetAtom};
    for (const auto& r : spec.regions) alphabet.push_back(r.label);
    parse_ltl(spec.formula, alphabet);
  }
  return spec;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open problem file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem(text.str());
}

void write_quotient(std::ostream& out, const Abstraction& abs,
                    const std::vector<ObservedRegion>& regions) {
  const auto& states = abs.quotient.states();
  out << "quotient dimension=" << abs.partition.dimension() << " states=" << states.size() << '\n';
  for (const auto& s : states) {
    out << "state " << s.id << " slice=" << s.slice_index
        << " obs=" << observation_name(s.observation, regions) << " -> " << s.successor << '\n';
  }
  for (const auto& s : states) out << cell_line(s.id, abs.partition.block(s.id).cell) << '\n';
}

QuotientFile read_quotient(std::istream& in) {
  auto fail = [](std::size_t line, const std::string& what) -> void {
    throw Error(ErrorCode::kParse, "quotient line " + std::to_string(line) + ": " + what);
  };

  QuotientFile file;
  std::string text;
  std::size_t line_no = 0;
  std::size_t expected = 0;
  std::map<BlockId, std::size_t> index;

  if (!std::getline(in, text)) fail(1, "empty input");
  ++line_no;
  if (std::sscanf(text.c_str(), "quotient dimension=%zu states=%zu", &file.dimension, &expected) != 2) {
    fail(line_no, "bad header");
  }

  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty()) continue;
    std::istringstream line(text);
    std::string kind;
    line >> kind;
    if (kind == "state") {
      QuotientFile::Entry e;
      std::string slice, obs, arrow;
      line >> e.id >> slice >> obs >> arrow >> e.successor;
      if (!line || slice.rfind("slice=", 0) != 0 || obs.rfind("obs=", 0) != 0 || arrow != "->") {
        fail(line_no, "bad state line");
      }
      e.slice_index = std::stoul(slice.substr(6));
      e.observation = obs.substr(4);
      e.cell = Cell(file.dimension);
      index[e.id] = file.states.size();
      file.states.push_back(std::move(e));
    } else if (kind == "cell") {
      std::string id_text;
      line >> id_text;
      if (id_text.empty() || id_text.back() != ':') fail(line_no, "bad cell id");
      const BlockId id = std::stoul(id_text.substr(0, id_text.size() - 1));
      if (!index.contains(id)) fail(line_no, "cell for unknown state");
      std::vector<Constraint> rows;
      std::string token;
      while (line >> token) {
        Constraint c;
        for (std::size_t j = 0; j < file.dimension; ++j) {
          if (j > 0 && !(line >> token)) fail(line_no, "truncated constraint");
          try {
            c.normal.push_back(parse_rational(token));
          } catch (const Error&) {
            fail(line_no, "bad coefficient '" + token + "'");
          }
        }
        std::string rel, rhs;
        line >> rel >> rhs;
        if (rel != "<=" && rel != "<") fail(line_no, "bad relation '" + rel + "'");
        c.strict = rel == "<";
        try {
          c.offset = parse_rational(rhs);
        } catch (const Error&) {
          fail(line_no, "bad offset '" + rhs + "'");
        }
        rows.push_back(std::move(c));
        if (line >> token && token != ";") fail(line_no, "expected ';'");
      }
      file.states[index[id]].cell = Cell(file.dimension, std::move(rows));
    } else if (kind != "satisfying:") {
      fail(line_no, "unknown line kind '" + kind + "'");
    }
  }
  if (file.states.size() != expected) fail(line_no, "state count differs from header");
  return file;
}

void write_satisfying(std::ostream& out, const SatisfyingSet& sat, const Abstraction& abs,
                      const std::vector<ObservedRegion>& regions) {
  out << "quotient dimension=" << abs.partition.dimension() << " states=" << sat.states.size() << '\n';
  for (BlockId id : sat.states) {
    const auto& s = abs.quotient.state(id);
    out << "state " << s.id << " slice=" << s.slice_index
        << " obs=" << observation_name(s.observation, regions) << " -> " << s.successor << '\n';
  }
  for (BlockId id : sat.states) out << cell_line(id, abs.partition.block(id).cell) << '\n';
  out << "satisfying: " << sat.states.size() << " of " << abs.quotient.size() << " states\n";
}

}  // namespace polybisim
