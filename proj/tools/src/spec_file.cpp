#include "selfsim/cli/spec_file.hpp"

#include "selfsim/error.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace selfsim::cli {

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

enum class Block { None, Graph, Group, Action, Katsura };

struct PendingTable {
  std::size_t line;
  std::map<std::string, std::pair<std::string, std::size_t>> vertex;  // v -> (w, line)
  std::map<std::string, std::tuple<std::string, std::string, std::size_t, std::size_t>> edge;
};

class SpecParser {
 public:
  explicit SpecParser(std::string origin) { out_.origin = std::move(origin); }

  SpecFile run(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      std::string_view line = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      line_ = lineno;
      handle(line);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
    return finish();
  }

 private:
  [[noreturn]] void syntax(const std::string& msg, std::size_t col) const {
    throw ParseError(msg, line_, col);
  }
  [[noreturn]] void semantic(const std::string& msg, std::size_t col) const {
    throw SemanticError(msg, line_, col);
  }
  void expect_count(const std::vector<Token>& t, std::size_t n, const char* usage) const {
    if (t.size() != n)
      syntax(std::string("expected `") + usage + "`", t.size() > n ? t[n].col : t.back().col);
  }

  void handle(std::string_view line) {
    auto t = split(line);
    if (t.empty()) return;
    const std::string& kw = t[0].text;
    if (kw == "graph") {
      expect_count(t, 1, "graph");
      if (katsura_line_) semantic("graph block cannot be combined with a katsura block", 1);
      block_ = Block::Graph;
      graph_line_ = line_;
    } else if (kw == "group") {
      expect_count(t, 2, "group Z|finite");
      if (group_line_) semantic("group declared twice", 1);
      if (t[1].text == "Z") {
        group_z_ = true;
      } else if (t[1].text != "finite") {
        syntax("unknown group kind `" + t[1].text + "`; expected Z or finite", t[1].col);
      }
      group_line_ = line_;
      block_ = Block::Group;
    } else if (kw == "action" || kw == "gen") {
      begin_action(t);
    } else if (kw == "katsura") {
      expect_count(t, 1, "katsura");
      if (graph_line_ || group_line_) semantic("katsura block cannot be combined with explicit blocks", 1);
      katsura_line_ = line_;
      block_ = Block::Katsura;
    } else {
      switch (block_) {
        case Block::Graph: graph_line(t); break;
        case Block::Group: group_line(t); break;
        case Block::Action: action_line(t); break;
        case Block::Katsura: katsura_line(t, line); break;
        case Block::None: syntax("statement `" + kw + "` outside a block", t[0].col);
      }
    }
  }

  void graph_line(const std::vector<Token>& t) {
    if (t[0].text == "vertex") {
      expect_count(t, 2, "vertex <id>");
      if (graph_.find_vertex(t[1].text)) semantic("duplicate vertex `" + t[1].text + "`", t[1].col);
      graph_.add_vertex(t[1].text);
    } else if (t[0].text == "edge") {
      expect_count(t, 4, "edge <id> <range> <source>");
      if (graph_.find_edge(t[1].text)) semantic("duplicate edge `" + t[1].text + "`", t[1].col);
      auto r = graph_.find_vertex(t[2].text);
      if (!r) semantic("unknown vertex `" + t[2].text + "`", t[2].col);
      auto s = graph_.find_vertex(t[3].text);
      if (!s) semantic("unknown vertex `" + t[3].text + "`", t[3].col);
      graph_.add_edge(t[1].text, *r, *s);
    } else {
      syntax("unknown graph statement `" + t[0].text + "`", t[0].col);
    }
  }

  void group_line(const std::vector<Token>& t) {
    if (group_z_) syntax("group Z takes no further statements", t[0].col);
    if (t[0].text == "elem") {
      if (t.size() < 2) syntax("expected `elem <id>...`", t[0].col);
      if (!mul_.empty()) semantic("elements must be declared before mul rows", t[0].col);
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (elem_index_.count(t[i].text)) semantic("duplicate element `" + t[i].text + "`", t[i].col);
        elem_index_[t[i].text] = elems_.size();
        elems_.push_back(t[i].text);
      }
    } else if (t[0].text == "mul") {
      if (t.size() != 5 || t[3].text != "=") syntax("expected `mul <a> <b> = <c>`", t[0].col);
      std::size_t idx[3];
      const std::size_t pos[3] = {1, 2, 4};
      for (int k = 0; k < 3; ++k) {
        auto it = elem_index_.find(t[pos[k]].text);
        if (it == elem_index_.end()) semantic("unknown element `" + t[pos[k]].text + "`", t[pos[k]].col);
        idx[k] = it->second;
      }
      auto key = std::make_pair(idx[0], idx[1]);
      if (mul_.count(key)) semantic("duplicate mul row for " + t[1].text + "*" + t[2].text, t[0].col);
      mul_[key] = idx[2];
    } else {
      syntax("unknown group statement `" + t[0].text + "`", t[0].col);
    }
  }

  void ensure_group_built(std::size_t col) {
    if (group_) return;
    if (!graph_line_) semantic("action block requires a preceding graph block", col);
    if (!group_line_) semantic("action block requires a preceding group block", col);
    if (group_z_) {
      group_ = Group::integers();
      return;
    }
    if (elems_.empty()) semantic("finite group has no elements", col);
    std::vector<std::vector<std::size_t>> table(elems_.size(),
                                                std::vector<std::size_t>(elems_.size(), Group::kMissing));
    for (std::size_t a = 0; a < elems_.size(); ++a)
      for (std::size_t b = 0; b < elems_.size(); ++b) {
        auto it = mul_.find({a, b});
        if (it == mul_.end())
          throw SemanticError("incomplete multiplication table: " + elems_[a] + "*" + elems_[b] + " missing",
                              *group_line_, 1);
        table[a][b] = it->second;
      }
    Group g = Group::finite(elems_, table);
    ValidationReport rep = validate_group(g);
    if (!rep.ok()) throw SemanticError(rep.violations.front().message, *group_line_, 1);
    group_ = g;
  }

  void begin_action(const std::vector<Token>& t) {
    std::size_t first = t[0].text == "action" ? 1 : 0;
    ensure_group_built(t[0].col);
    block_ = Block::Action;
    std::string key;
    if (t.size() > first && t[first].text == "gen") {
      if (t.size() != first + 2) syntax("expected `gen 1` or `gen -1`", t[first].col);
      if (!group_->is_integers()) semantic("`gen` tables apply to group Z only", t[first].col);
      if (t[first + 1].text != "1" && t[first + 1].text != "-1")
        syntax("expected generator 1 or -1", t[first + 1].col);
      key = t[first + 1].text;
    } else {
      if (t.size() != first + 1) syntax("expected `action <elem>` or `action gen 1|-1`", t[0].col);
      if (group_->is_integers())
        semantic("group Z actions are given by `gen 1` / `gen -1` tables", t[first].col);
      if (!elem_index_.count(t[first].text)) semantic("unknown element `" + t[first].text + "`", t[first].col);
      key = t[first].text;
    }
    if (tables_.count(key)) semantic("action for `" + key + "` given twice", t[0].col);
    current_ = key;
    tables_[key].line = line_;
  }

  void action_line(const std::vector<Token>& t) {
    PendingTable& tab = tables_[current_];
    if (t[0].text == "vertex") {
      if (t.size() != 4 || t[2].text != "->") syntax("expected `vertex <v> -> <w>`", t[0].col);
      for (int k : {1, 3})
        if (!graph_.find_vertex(t[k].text)) semantic("unknown vertex `" + t[k].text + "`", t[k].col);
      if (tab.vertex.count(t[1].text)) semantic("vertex `" + t[1].text + "` mapped twice", t[1].col);
      tab.vertex[t[1].text] = {t[3].text, line_};
    } else if (t[0].text == "edge") {
      if (t.size() != 6 || t[2].text != "->" || t[4].text != "cocycle")
        syntax("expected `edge <e> -> <f> cocycle <g>`", t[0].col);
      for (int k : {1, 3})
        if (!graph_.find_edge(t[k].text)) semantic("unknown edge `" + t[k].text + "`", t[k].col);
      if (!group_->parse(t[5].text)) semantic("unknown group element `" + t[5].text + "`", t[5].col);
      if (tab.edge.count(t[1].text)) semantic("edge `" + t[1].text + "` mapped twice", t[1].col);
      tab.edge[t[1].text] = {t[3].text, t[5].text, line_, t[5].col};
    } else {
      syntax("unknown action statement `" + t[0].text + "`", t[0].col);
    }
  }

  static std::vector<std::vector<BigInt>> parse_matrix(std::string_view s, std::size_t col0,
                                                       std::size_t line) {
    // [[a,b],[c,d]] with optional whitespace
    std::vector<std::vector<BigInt>> rows;
    std::size_t i = 0;
    auto fail = [&](const std::string& m) -> void { throw ParseError(m, line, col0 + i); };
    auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto eat = [&](char c) {
      skip();
      if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
      ++i;
    };
    eat('[');
    skip();
    if (i < s.size() && s[i] == ']') fail("empty matrix");
    while (true) {
      eat('[');
      rows.emplace_back();
      while (true) {
        skip();
        std::size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        std::size_t digits = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == digits) fail("expected an integer");
        rows.back().emplace_back(std::string(s.substr(i, j - i)));
        i = j;
        skip();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        eat(']');
        break;
      }
      skip();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      eat(']');
      break;
    }
    skip();
    if (i != s.size()) fail("trailing characters after matrix");
    return rows;
  }

  void katsura_line(const std::vector<Token>& t, std::string_view raw) {
    const std::string& kw = t[0].text;
    if (kw == "A" || kw == "B") {
      auto eq = raw.find('=');
      if (eq == std::string_view::npos) syntax("expected `" + kw + " = [[...]]`", t[0].col);
      auto& slot = kw == "A" ? kA_ : kB_;
      if (slot) semantic("matrix " + kw + " given twice", t[0].col);
      slot = parse_matrix(raw.substr(eq + 1), eq + 2, line_);
      (kw == "A" ? kA_line_ : kB_line_) = line_;
    } else if (kw == "vertices") {
      if (t.size() < 2) syntax("expected `vertices <id>...`", t[0].col);
      std::set<std::string> seen;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!seen.insert(t[i].text).second) semantic("duplicate vertex `" + t[i].text + "`", t[i].col);
        kvertices_.push_back(t[i].text);
      }
      kvertices_line_ = line_;
    } else if (kw == "edge") {
      expect_count(t, 5, "edge <id> <range> <source> <n>");
      kedges_.push_back({t[1].text, t[2].text, t[3].text, t[4].text, line_, t[1].col});
    } else {
      syntax("unknown katsura statement `" + kw + "`", t[0].col);
    }
  }

  SpecFile finish() {
    if (katsura_line_) return finish_katsura();
    if (!graph_line_) throw SemanticError("no graph or katsura block", 0, 0);
    ValidationReport grep = validate_graph(graph_);
    if (!grep.ok()) throw SemanticError(grep.violations.front().message, *graph_line_, 1);
    if (!group_line_) {
      if (!tables_.empty()) throw SemanticError("action block without group block", 0, 0);
      out_.action = trivial_action(graph_);
      return std::move(out_);
    }
    ensure_group_built(1);
    std::vector<ElementTable> tables;
    if (group_->is_integers()) {
      if (!tables_.count("1"))
        throw SemanticError("generator action required: `gen 1` table missing", *group_line_, 1);
      ElementTable plus = build_table("1");
      ElementTable minus = tables_.count("-1") ? build_table("-1") : invert(plus);
      tables = {plus, minus};
    } else {
      for (const auto& name : elems_) {
        if (tables_.count(name)) {
          tables.push_back(build_table(name));
        } else if (group_->is_identity(group_->elem(name))) {
          tables.push_back(identity_table());
        } else {
          throw SemanticError("action for element `" + name + "` required", *group_line_, 1);
        }
      }
    }
    auto act = std::make_shared<SelfSimilarAction>(graph_, *group_, std::move(tables));
    ValidationReport rep = validate_action(*act);
    if (!rep.ok()) {
      std::size_t line = tables_.empty() ? *group_line_ : tables_.begin()->second.line;
      throw SemanticError(rep.violations.front().message, line, 1);
    }
    out_.action = act;
    return std::move(out_);
  }

  ElementTable identity_table() const {
    ElementTable t;
    for (auto v : graph_.vertices()) t.vertex_map.push_back(v);
    for (auto e : graph_.edge_ids()) {
      t.edge_map.push_back(e);
      t.cocycle.push_back(group_->identity());
    }
    return t;
  }

  ElementTable invert(const ElementTable& p) const {
    ElementTable m;
    m.vertex_map.resize(p.vertex_map.size());
    m.edge_map.resize(p.edge_map.size());
    m.cocycle.resize(p.cocycle.size());
    for (std::size_t v = 0; v < p.vertex_map.size(); ++v)
      m.vertex_map[p.vertex_map[v].index] = VertexId{static_cast<std::uint32_t>(v)};
    // phi(-1, sigma_1(e)) = -phi(1, e)
    for (std::size_t e = 0; e < p.edge_map.size(); ++e) {
      m.edge_map[p.edge_map[e].index] = EdgeId{static_cast<std::uint32_t>(e)};
      m.cocycle[p.edge_map[e].index] = group_->inverse(p.cocycle[e]);
    }
    return m;
  }

  ElementTable build_table(const std::string& key) const {
    const PendingTable& tab = tables_.at(key);
    ElementTable t;
    for (auto v : graph_.vertices()) {
      auto it = tab.vertex.find(graph_.vertex_name(v));
      if (it == tab.vertex.end())
        throw SemanticError("action `" + key + "` does not map vertex `" + graph_.vertex_name(v) + "`",
                            tab.line, 1);
      t.vertex_map.push_back(graph_.vertex_by_name(it->second.first));
    }
    for (auto e : graph_.edge_ids()) {
      auto it = tab.edge.find(graph_.edge_name(e));
      if (it == tab.edge.end())
        throw SemanticError("action `" + key + "` does not map edge `" + graph_.edge_name(e) + "`",
                            tab.line, 1);
      t.edge_map.push_back(graph_.edge_by_name(std::get<0>(it->second)));
      t.cocycle.push_back(*group_->parse(std::get<1>(it->second)));
    }
    return t;
  }

  SpecFile finish_katsura() {
    if (!kA_) throw SemanticError("katsura block needs matrix A", *katsura_line_, 1);
    if (!kB_) throw SemanticError("katsura block needs matrix B", *katsura_line_, 1);
    KatsuraSpec spec;
    spec.N = kA_->size();
    spec.A = *kA_;
    spec.B = *kB_;
    spec.vertex_names = kvertices_;
    ValidationReport rep = validate_katsura_spec(spec);
    if (!kvertices_.empty() && kvertices_.size() != spec.N)
      rep.add("katsura-shape", "vertices lists " + std::to_string(kvertices_.size()) + " names for N = " +
                                   std::to_string(spec.N));
    if (!rep.ok()) throw SemanticError(rep.violations.front().message, kA_line_, 1);

    auto vindex = [&](const std::string& name, std::size_t line) -> std::size_t {
      for (std::size_t i = 0; i < spec.N; ++i) {
        std::string n = kvertices_.empty() ? "v" + std::to_string(i + 1) : kvertices_[i];
        if (n == name) return i;
      }
      throw SemanticError("unknown vertex `" + name + "`", line, 1);
    };
    KatsuraEdgeNames names;
    std::set<std::string> used;
    for (const auto& ke : kedges_) {
      std::size_t i = vindex(ke.range, ke.line), j = vindex(ke.source, ke.line);
      BigInt n;
      try {
        n = BigInt(ke.n);
      } catch (const std::exception&) {
        throw ParseError("expected an integer edge index", ke.line, ke.col);
      }
      if (n < 0 || n >= spec.A[i][j])
        throw SemanticError("edge index " + ke.n + " out of range for A entry " + spec.A[i][j].str(), ke.line,
                            ke.col);
      if (!used.insert(ke.name).second) throw SemanticError("duplicate edge `" + ke.name + "`", ke.line, ke.col);
      if (!names.emplace(std::make_tuple(i, j, n), ke.name).second)
        throw SemanticError("edge (" + ke.range + ", " + ke.source + ", " + ke.n + ") named twice", ke.line,
                            ke.col);
    }
    out_.action = build_triple(spec, names);
    out_.katsura = spec;
    return std::move(out_);
  }

  struct KEdge {
    std::string name, range, source, n;
    std::size_t line, col;
  };

  SpecFile out_;
  std::size_t line_ = 0;
  Block block_ = Block::None;
  Graph graph_;
  std::optional<std::size_t> graph_line_, group_line_, katsura_line_;
  bool group_z_ = false;
  std::vector<std::string> elems_;
  std::map<std::string, std::size_t> elem_index_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mul_;
  std::optional<Group> group_;
  std::map<std::string, PendingTable> tables_;
  std::string current_;
  std::optional<std::vector<std::vector<BigInt>>> kA_, kB_;
  std::size_t kA_line_ = 0, kB_line_ = 0, kvertices_line_ = 0;
  std::vector<std::string> kvertices_;
  std::vector<KEdge> kedges_;
};

}  // namespace

SpecFile parse_spec(std::string_view text, std::string origin) {
  return SpecParser(std::move(origin)).run(text);
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path);
}

}  // namespace selfsim::cli
