#include "c2lat/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

namespace c2lat {

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

Word power(const Word& w, long long k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word r;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) r.insert(r.end(), base.begin(), base.end());
  return r;
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

Word reduce(const Word& w) {
  Word r;
  for (Letter x : w) {
    if (!r.empty() && r.back() == -x)
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

std::vector<std::string> FinPresentation::generator_names() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.name);
  return out;
}

std::size_t FinPresentation::index_of(std::string_view gen) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == gen) return i;
  throw std::invalid_argument("unknown generator '" + std::string(gen) + "'");
}

void FinPresentation::validate(bool sided) const {
  const int k = static_cast<int>(generators.size());
  for (const auto& r : relators)
    for (Letter x : r)
      if (x == 0 || x > k || x < -k) throw std::invalid_argument(name + ": relator uses undeclared generator");
  if (sided) {
    bool has_a = false, has_b = false;
    for (const auto& g : generators) {
      if (g.side == 'a')
        has_a = true;
      else if (g.side == 'b')
        has_b = true;
      else
        throw std::invalid_argument(name + ": generator " + g.name + " has no side marker");
    }
    if (!has_a || !has_b) throw std::invalid_argument(name + ": both sides need generators");
  }
}

std::string FinPresentation::format_word(const Word& w) const { return c2lat::format_word(w, generator_names()); }

// ---------------------------------------------------------------------------
// Word parsing

namespace {

struct WordParser {
  std::string_view s;
  const std::vector<std::string>& names;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg + " at column " + std::to_string(i + 1) + " in '" + std::string(s) + "'");
  }
  long long exponent() {
    ws();
    if (i >= s.size() || s[i] != '^') return 1;
    ++i;
    ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected exponent");
    long long k = std::stoll(std::string(s.substr(i, j - i)));
    i = j;
    return neg ? -k : k;
  }
  Word word(bool nested) {
    Word w;
    for (;;) {
      ws();
      if (i >= s.size()) {
        if (nested) fail("unbalanced '('");
        return w;
      }
      if (s[i] == ')') {
        if (!nested) fail("unexpected ')'");
        ++i;
        return w;
      }
      Word atom;
      if (s[i] == '(') {
        ++i;
        atom = word(true);
      } else if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string name(s.substr(i, j - i));
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("undeclared generator '" + name + "'");
        atom = {static_cast<Letter>(it - names.begin()) + 1};
        i = j;
      } else {
        fail("unexpected character");
      }
      Word p = power(atom, exponent());
      w.insert(w.end(), p.begin(), p.end());
    }
  }
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  WordParser p{text, names};
  return p.word(false);
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i) os << ' ';
    os << names.at(std::abs(w[i]) - 1);
    long long e = static_cast<long long>(j - i) * (w[i] < 0 ? -1 : 1);
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Data files

FinPresentation parse_presentation(std::string_view text, std::string_view reading) {
  FinPresentation p;
  std::string primary;
  struct PendingRel {
    std::string tag, body;
    std::size_t line;
  };
  std::vector<PendingRel> rels;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    std::istringstream rs(rest);
    if (key == "name") {
      if (!(rs >> p.name)) throw ParseError("missing name", lineno);
    } else if (key == "gen") {
      Generator g;
      std::string side;
      if (!(rs >> g.name)) throw ParseError("missing generator name", lineno);
      if (rs >> side) {
        if (side != "a" && side != "b") throw ParseError("side must be 'a' or 'b'", lineno);
        g.side = side[0];
      }
      for (const auto& h : p.generators)
        if (h.name == g.name) throw ParseError("duplicate generator " + g.name, lineno);
      p.generators.push_back(g);
    } else if (key == "readings") {
      std::string r;
      while (rs >> r) p.readings.push_back(r);
    } else if (key == "primary") {
      if (!(rs >> primary)) throw ParseError("missing primary reading", lineno);
    } else if (key == "rel" || key.rfind("rel[", 0) == 0) {
      std::string tag;
      if (key != "rel") {
        if (key.back() != ']') throw ParseError("malformed reading tag", lineno);
        tag = key.substr(4, key.size() - 5);
      }
      rels.push_back({tag, rest, lineno});
    } else {
      throw ParseError("unknown directive '" + key + "'", lineno);
    }
  }
  if (!p.readings.empty()) {
    if (primary.empty()) primary = p.readings.front();
    p.reading = reading.empty() ? primary : std::string(reading);
    if (std::find(p.readings.begin(), p.readings.end(), p.reading) == p.readings.end())
      throw std::invalid_argument("unknown reading '" + p.reading + "'");
  } else if (!reading.empty()) {
    throw std::invalid_argument("presentation has no alternative readings");
  }
  const auto names = p.generator_names();
  for (const auto& r : rels) {
    if (!r.tag.empty()) {
      if (std::find(p.readings.begin(), p.readings.end(), r.tag) == p.readings.end())
        throw ParseError("undeclared reading '" + r.tag + "'", r.line);
      if (r.tag != p.reading) continue;
    }
    try {
      p.relators.push_back(parse_word(r.body, names));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), r.line);
    }
  }
  p.validate(false);
  return p;
}

FinPresentation load_presentation(const std::filesystem::path& file, std::string_view reading) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open presentation file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    FinPresentation p = parse_presentation(ss.str(), reading);
    if (p.name.empty()) p.name = file.filename().string();
    return p;
  } catch (const ParseError& e) {
    throw ParseError(e.message, e.line, file.string());
  }
}

namespace {
std::mutex g_data_mu;
std::filesystem::path g_data_dir;
}  // namespace

std::filesystem::path data_dir() {
  std::lock_guard lock(g_data_mu);
  if (!g_data_dir.empty()) return g_data_dir;
  if (const char* env = std::getenv("C2LAT_DATA")) return env;
  return C2LAT_DATA_DIR;
}

void set_data_dir(std::filesystem::path dir) {
  std::lock_guard lock(g_data_mu);
  g_data_dir = std::move(dir);
}

FinPresentation library_presentation(int i, std::string_view reading) {
  if (i < 1 || i > 35) throw std::out_of_range("library index must be in 1..35");
  char buf[8];
  std::snprintf(buf, sizeof buf, "L%02d", i);
  FinPresentation p = load_presentation(data_dir() / buf, reading);
  p.validate(true);
  return p;
}

FinPresentation model_presentation(std::string_view name) {
  if (name != "C4" && name != "C2xC2" && name != "C6" && name != "S3")
    throw std::invalid_argument("unknown model edge group '" + std::string(name) + "'");
  return load_presentation(data_dir() / std::string(name));
}

// ---------------------------------------------------------------------------
// Evaluation

Permutation evaluate(const Word& w, const std::vector<Permutation>& gens) {
  if (gens.empty()) throw std::invalid_argument("evaluate: no generators");
  std::vector<Permutation> invs;
  for (const auto& g : gens) invs.push_back(g.inverse());
  Permutation r = Permutation::identity(gens[0].degree());
  for (Letter x : w) r = r * (x > 0 ? gens.at(x - 1) : invs.at(-x - 1));
  return r;
}

EdgeSubgroups edge_subgroups(const FinPresentation& p, const PermGroup& g) {
  if (g.generators().size() != p.rank()) throw std::invalid_argument("edge_subgroups: rank mismatch");
  std::vector<Permutation> a, b;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    if (p.generators[i].side == 'a')
      a.push_back(g.generators()[i]);
    else if (p.generators[i].side == 'b')
      b.push_back(g.generators()[i]);
  }
  return {PermGroup(g.degree(), std::move(a)), PermGroup(g.degree(), std::move(b))};
}

}  // namespace c2lat
