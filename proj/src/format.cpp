#include "qhopf/format.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qhopf {

std::string ParseError::format(const std::string& msg, int line, int column) {
  if (line == 0) return msg;
  std::string s = "line " + std::to_string(line);
  if (column > 0) s += ", column " + std::to_string(column);
  return s + ": " + msg;
}

bool AlgebraFile::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

bool AlgebraFile::expects(const std::string& f) const {
  return std::find(expect.begin(), expect.end(), f) != expect.end();
}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split(const std::string& line, std::size_t from, std::size_t to) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < to) {
    while (i < to && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= to) break;
    std::size_t j = i;
    while (j < to && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

const std::map<std::string, int>& section_arity() {
  static const std::map<std::string, int> a = {
      {"mult", 3},    {"counit", 1}, {"coproduct", 3}, {"antipode", 2}, {"phi", 3},        {"phi_inv", 3},
      {"alpha", 1},   {"beta", 1},   {"R", 2},         {"R_inv", 2},    {"ribbon", 1},     {"ribbon_inv", 1},
      {"simples", 3},
  };
  return a;
}

const std::vector<std::string>& mandatory_sections() {
  static const std::vector<std::string> m = {"mult", "counit", "coproduct", "antipode", "phi", "alpha", "beta", "R"};
  return m;
}

struct Entry {
  std::vector<int> idx;
  Scalar value;
  int line;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  AlgebraFile run(std::optional<int> field_order) {
    std::istringstream in(text_);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::size_t end = raw.find('#');
      if (end == std::string::npos) end = raw.size();
      handle_line(raw, end);
    }
    return finish(field_order);
  }

 private:
  const std::string& text_;
  int line_no_ = 0;
  bool saw_magic_ = false;
  std::optional<int> dim_, order_;
  std::string name_;
  std::vector<std::string> flags_, expect_;
  std::string section_;
  std::map<std::string, int> section_line_;
  std::map<std::string, std::vector<Entry>> entries_;
  std::map<std::string, std::set<std::vector<int>>> seen_;
  struct PendingModule {
    std::string label;
    int dim;
    int line;
    std::vector<Entry> entries;
  };
  std::vector<PendingModule> modules_;

  [[noreturn]] void fail(const std::string& msg, int column) { throw ParseError(msg, line_no_, column); }

  int parse_int(const Token& t, const char* what) {
    if (t.text.empty() || t.text.size() > 6 || !std::all_of(t.text.begin(), t.text.end(), ::isdigit))
      fail(std::string("expected ") + what + ", got '" + t.text + "'", t.column);
    return std::stoi(t.text);
  }

  void handle_line(const std::string& raw, std::size_t end) {
    std::vector<Token> toks = split(raw, 0, end);
    if (toks.empty()) return;
    if (!saw_magic_) {
      if (toks[0].text != "qha" || toks.size() != 2 || toks[1].text != "1")
        fail("expected format header 'qha 1'", toks[0].column);
      saw_magic_ = true;
      return;
    }
    if (toks[0].text.front() == '[') {
      const std::string& t = toks[0].text;
      if (toks.size() != 1 || t.back() != ']') fail("malformed section header", toks[0].column);
      std::string name = t.substr(1, t.size() - 2);
      if (!section_arity().count(name)) fail("unknown section '" + name + "'", toks[0].column + 1);
      if (section_line_.count(name)) fail("duplicate section '" + name + "'", toks[0].column);
      if (!dim_ || !order_) fail("sections must follow the 'dim' and 'order' header lines", toks[0].column);
      section_ = name;
      section_line_[name] = line_no_;
      entries_[name];
      return;
    }
    if (section_.empty()) {
      handle_header(toks);
      return;
    }
    if (section_ == "simples" && toks[0].text == "module") {
      if (toks.size() != 3) fail("expected 'module <label> <dim>'", toks[0].column);
      for (const auto& m : modules_)
        if (m.label == toks[1].text) fail("duplicate module label '" + toks[1].text + "'", toks[1].column);
      int d = parse_int(toks[2], "module dimension");
      if (d < 1) fail("module dimension must be positive", toks[2].column);
      modules_.push_back({toks[1].text, d, line_no_, {}});
      return;
    }
    handle_entry(raw, end);
  }

  void handle_header(const std::vector<Token>& toks) {
    const std::string& key = toks[0].text;
    if (key == "name") {
      if (toks.size() != 2) fail("expected 'name <identifier>'", toks[0].column);
      name_ = toks[1].text;
    } else if (key == "dim" || key == "order") {
      if (toks.size() != 2) fail("expected '" + key + " <integer>'", toks[0].column);
      int v = parse_int(toks[1], "positive integer");
      if (v < 1) fail(key + " must be positive", toks[1].column);
      if (key == "dim" && v > 16) fail("dim above 16 is not supported", toks[1].column);
      if (key == "order" && v > 1000) fail("order above 1000 is not supported", toks[1].column);
      (key == "dim" ? dim_ : order_) = v;
    } else if (key == "flags" || key == "expect") {
      auto& dst = key == "flags" ? flags_ : expect_;
      for (std::size_t i = 1; i < toks.size(); ++i) dst.push_back(toks[i].text);
    } else {
      fail("unknown header key '" + key + "'", toks[0].column);
    }
  }

  void handle_entry(const std::string& raw, std::size_t end) {
    std::size_t eq = raw.find('=');
    if (eq == std::string::npos || eq >= end) fail("expected 'indices = scalar'", 1);
    std::vector<Token> idx_toks = split(raw, 0, eq);
    const int arity = section_arity().at(section_);
    if (static_cast<int>(idx_toks.size()) != arity)
      fail("section [" + section_ + "] takes " + std::to_string(arity) + " indices", idx_toks.empty() ? 1 : idx_toks[0].column);
    if (section_ == "simples" && modules_.empty()) fail("entry before any 'module' line", idx_toks[0].column);
    std::vector<int> idx;
    for (std::size_t k = 0; k < idx_toks.size(); ++k) {
      int v = parse_int(idx_toks[k], "index");
      int bound = *dim_;
      if (section_ == "simples" && k > 0) bound = modules_.back().dim;
      if (v >= bound) fail("index " + std::to_string(v) + " out of range (bound " + std::to_string(bound) + ")", idx_toks[k].column);
      idx.push_back(v);
    }
    std::size_t lit_start = eq + 1;
    while (lit_start < end && (raw[lit_start] == ' ' || raw[lit_start] == '\t')) ++lit_start;
    std::string lit = raw.substr(lit_start, end - lit_start);
    while (!lit.empty() && (lit.back() == ' ' || lit.back() == '\t')) lit.pop_back();
    Scalar value;
    try {
      value = parse_scalar(lit, *order_);
    } catch (const LiteralError& e) {
      fail(std::string("bad scalar literal: ") + e.what(), static_cast<int>(lit_start + e.column) + 1);
    } catch (const ArithmeticError& e) {
      fail(std::string("bad scalar literal: ") + e.what(), static_cast<int>(lit_start) + 1);
    }
    if (section_ == "simples") {
      auto& m = modules_.back();
      for (const auto& e : m.entries)
        if (e.idx == idx) fail("duplicate entry", idx_toks[0].column);
      m.entries.push_back({idx, value, line_no_});
      return;
    }
    if (!seen_[section_].insert(idx).second) fail("duplicate entry", idx_toks[0].column);
    entries_[section_].push_back({idx, value, line_no_});
  }

  Tensor tensor_of(const std::string& sec, int legs, int n) {
    Tensor t(n, legs);
    for (const auto& e : entries_[sec]) {
      Index i{};
      for (int l = 0; l < legs; ++l) i[l] = e.idx[l];
      t[t.flat(i)] = e.value;
    }
    return t;
  }

  AlgebraFile finish(std::optional<int> field_order) {
    if (!saw_magic_) throw ParseError("empty file (expected format header 'qha 1')", 0, 0);
    if (!dim_) throw ParseError("missing 'dim' header", 0, 0);
    if (!order_) throw ParseError("missing 'order' header", 0, 0);
    for (const auto& s : mandatory_sections()) {
      auto it = section_line_.find(s);
      if (it == section_line_.end()) throw ParseError("missing mandatory section [" + s + "]", 0, 0);
      if (entries_[s].empty()) throw ParseError("missing mandatory section [" + s + "] (section is empty)", it->second, 0);
    }
    const int n = *dim_;
    AlgebraFile out;
    out.flags = flags_;
    out.expect = expect_;
    QuasiHopfAlgebra& A = out.algebra;
    A.name = name_;
    A.dim = n;
    A.order = *order_;
    A.mult = MultTable(n);
    for (const auto& e : entries_["mult"]) A.mult.set(e.idx[0], e.idx[1], e.idx[2], e.value);
    A.counit.assign(n, Scalar());
    for (const auto& e : entries_["counit"]) A.counit[e.idx[0]] = e.value;
    A.coproduct.assign(n, Tensor(n, 2));
    for (const auto& e : entries_["coproduct"]) A.coproduct[e.idx[0]].at({e.idx[1], e.idx[2]}) = e.value;
    A.antipode = ExactMatrix(n, n);
    for (const auto& e : entries_["antipode"]) A.antipode(e.idx[1], e.idx[0]) = e.value;
    A.phi = tensor_of("phi", 3, n);
    if (section_line_.count("phi_inv") && !entries_["phi_inv"].empty()) A.phi_inv = tensor_of("phi_inv", 3, n);
    A.alpha = tensor_of("alpha", 1, n);
    A.beta = tensor_of("beta", 1, n);
    A.R = tensor_of("R", 2, n);
    if (section_line_.count("R_inv") && !entries_["R_inv"].empty()) A.R_inv = tensor_of("R_inv", 2, n);
    if (section_line_.count("ribbon") && !entries_["ribbon"].empty()) A.ribbon = tensor_of("ribbon", 1, n);
    if (section_line_.count("ribbon_inv") && !entries_["ribbon_inv"].empty()) {
      if (!A.ribbon) throw ParseError("[ribbon_inv] given without [ribbon]", section_line_["ribbon_inv"], 0);
      A.ribbon_inv = tensor_of("ribbon_inv", 1, n);
    }
    for (const auto& pm : modules_) {
      AModule m;
      m.label = pm.label;
      m.dim = pm.dim;
      m.action.assign(n, ExactMatrix(pm.dim, pm.dim));
      for (const auto& e : pm.entries) m.action[e.idx[0]](e.idx[1], e.idx[2]) = e.value;
      out.simples.push_back(std::move(m));
    }
    if (field_order) embed_all(out, *field_order);
    try {
      complete_inverses(A);
    } catch (const std::runtime_error& e) {
      throw ParseError(e.what(), 0, 0);
    }
    return out;
  }

  static void embed_all(AlgebraFile& f, int m) {
    QuasiHopfAlgebra& A = f.algebra;
    if (m < 1 || m % A.order != 0)
      throw ParseError("field order " + std::to_string(m) + " is not a multiple of the declared order " +
                           std::to_string(A.order),
                       0, 0);
    auto lift = [m](Tensor& t) {
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = t[i].embed(m);
    };
    MultTable mt(A.dim);
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j)
        for (const auto& [k, v] : A.mult.product(i, j)) mt.set(i, j, k, v.embed(m));
    A.mult = mt;
    for (auto& s : A.counit) s = s.embed(m);
    for (auto& t : A.coproduct) lift(t);
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j) A.antipode(i, j) = A.antipode(i, j).embed(m);
    for (Tensor* t : {&A.phi, &A.phi_inv, &A.alpha, &A.beta, &A.R, &A.R_inv})
      if (t->legs()) lift(*t);
    if (A.ribbon) lift(*A.ribbon);
    if (A.ribbon_inv) lift(*A.ribbon_inv);
    for (auto& mod : f.simples)
      for (auto& mat : mod.action)
        for (int r = 0; r < mat.rows(); ++r)
          for (int c = 0; c < mat.cols(); ++c) mat(r, c) = mat(r, c).embed(m);
    A.order = m;
  }
};

void write_tensor(std::ostringstream& os, const char* name, const Tensor& t, int order) {
  os << "\n[" << name << "]\n";
  t.for_each_nonzero([&](const Index& idx, const Scalar& v) {
    for (int l = 0; l < t.legs(); ++l) os << idx[l] << ' ';
    os << "= " << v.str(order) << '\n';
  });
}

}  // namespace

AlgebraFile parse_algebra(const std::string& text, std::optional<int> field_order) {
  return Parser(text).run(field_order);
}

AlgebraFile parse_algebra_file(const std::string& path, std::optional<int> field_order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), field_order);
}

std::string serialise(const AlgebraFile& f) {
  const QuasiHopfAlgebra& A = f.algebra;
  const int m = A.order;
  std::ostringstream os;
  os << "qha 1\n";
  if (!A.name.empty()) os << "name " << A.name << '\n';
  os << "dim " << A.dim << '\n' << "order " << m << '\n';
  if (!f.flags.empty()) {
    os << "flags";
    for (const auto& s : f.flags) os << ' ' << s;
    os << '\n';
  }
  if (!f.expect.empty()) {
    os << "expect";
    for (const auto& s : f.expect) os << ' ' << s;
    os << '\n';
  }
  os << "\n[mult]\n";
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (const auto& [k, v] : A.mult.product(i, j)) os << i << ' ' << j << ' ' << k << " = " << v.str(m) << '\n';
  os << "\n[counit]\n";
  for (int i = 0; i < A.dim; ++i)
    if (!A.counit[i].is_zero()) os << i << " = " << A.counit[i].str(m) << '\n';
  os << "\n[coproduct]\n";
  for (int i = 0; i < A.dim; ++i)
    A.coproduct[i].for_each_nonzero([&](const Index& idx, const Scalar& v) {
      os << i << ' ' << idx[0] << ' ' << idx[1] << " = " << v.str(m) << '\n';
    });
  os << "\n[antipode]\n";
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (!A.antipode(j, i).is_zero()) os << i << ' ' << j << " = " << A.antipode(j, i).str(m) << '\n';
  write_tensor(os, "phi", A.phi, m);
  write_tensor(os, "phi_inv", A.phi_inv, m);
  write_tensor(os, "alpha", A.alpha, m);
  write_tensor(os, "beta", A.beta, m);
  write_tensor(os, "R", A.R, m);
  write_tensor(os, "R_inv", A.R_inv, m);
  if (A.ribbon) write_tensor(os, "ribbon", *A.ribbon, m);
  if (A.ribbon_inv) write_tensor(os, "ribbon_inv", *A.ribbon_inv, m);
  if (!f.simples.empty()) {
    os << "\n[simples]\n";
    for (const auto& mod : f.simples) {
      os << "module " << mod.label << ' ' << mod.dim << '\n';
      for (int i = 0; i < A.dim; ++i)
        for (int r = 0; r < mod.dim; ++r)
          for (int c = 0; c < mod.dim; ++c)
            if (!mod.action[i](r, c).is_zero())
              os << i << ' ' << r << ' ' << c << " = " << mod.action[i](r, c).str(m) << '\n';
    }
  }
  return os.str();
}

}  // namespace qhopf
