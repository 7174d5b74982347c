#include "formcone/session.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "formcone/errors.hpp"

namespace formcone {

namespace {

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

// Splits on commas, reporting each piece with its column offset.
std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view s,
                                                                   std::size_t offset) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ',') {
      out.push_back({s.substr(start, i - start), offset + start});
      start = i + 1;
    }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

const std::vector<std::string> kDirectives{"field", "vars", "base:", "module:", "q:", "a:", "set"};

}  // namespace

bool operator==(const SessionSpec& a, const SessionSpec& b) {
  if (!same_ring(a.ring, b.ring) || a.base != b.base || a.module != b.module || a.q != b.q ||
      !(a.params == b.params) || a.system.size() != b.system.size())
    return false;
  for (std::size_t i = 0; i < a.system.size(); ++i)
    if (a.system[i].element != b.system[i].element || a.system[i].degree != b.system[i].degree)
      return false;
  return true;
}

const std::vector<std::string>& session_keys() {
  static const std::vector<std::string> keys{"n_max",         "l_max",          "window",
                                             "degree_cap",    "probe_cap",      "search_random",
                                             "search_extra_degree", "max_reductions"};
  return keys;
}

void set_parameter(SessionParams& params, std::string_view key, std::string_view value) {
  auto v = parse_uint(value);
  if (!v) throw InputError("value '" + std::string(value) + "' for " + std::string(key) +
                           " is not a natural number");
  auto small = [&](unsigned& slot) {
    if (*v > 100000) throw InputError(std::string(key) + " is too large");
    slot = static_cast<unsigned>(*v);
  };
  if (key == "n_max") small(params.n_max);
  else if (key == "l_max") small(params.l_max);
  else if (key == "window") small(params.window);
  else if (key == "degree_cap") small(params.degree_cap);
  else if (key == "probe_cap") small(params.probe_cap);
  else if (key == "search_random") small(params.search_random);
  else if (key == "search_extra_degree") small(params.search_extra_degree);
  else if (key == "max_reductions") params.max_reductions = *v;
  else throw InputError("unknown parameter '" + std::string(key) + "'");
  if (params.window == 0) throw InputError("window must be positive");
  if (params.l_max == 0) throw InputError("l_max must be positive");
}

SessionSpec parse_session(std::string_view text, bool validate) {
  SessionSpec spec;
  std::optional<Field> field;
  std::vector<std::string> vars;
  struct Pending {
    std::string key;
    std::string body;
    std::size_t line, column;
  };
  std::vector<Pending> pending;

  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t col = 0;
    std::string_view line = trim(raw, &col);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t word_end = 0;
    while (word_end < line.size() && line[word_end] != ' ' && line[word_end] != '\t' &&
           line[word_end] != ':')
      ++word_end;
    std::string word(line.substr(0, word_end));
    bool colon = word_end < line.size() && line[word_end] == ':';
    std::size_t rest_col = col + word_end + (colon ? 1 : 0);
    std::string_view rest = trim(line.substr(word_end + (colon ? 1 : 0)), &rest_col);

    if (word == "field" && !colon) {
      if (field) throw ParseError(line_no, col + 1, "field declared twice", {});
      if (rest == "QQ") {
        field = Field::rationals();
      } else if (rest.substr(0, 2) == "FP") {
        std::size_t pc = rest_col + 2;
        auto p = parse_uint(trim(rest.substr(2), &pc));
        if (!p) throw ParseError(line_no, pc + 1, "expected a characteristic", {"<prime>"});
        try {
          field = Field::prime(*p);
        } catch (const InputError& e) {
          throw ParseError(line_no, pc + 1, e.what(), {"<prime>"});
        }
      } else {
        throw ParseError(line_no, rest_col + 1, "unknown field", {"QQ", "FP"});
      }
    } else if (word == "vars" && !colon) {
      if (!vars.empty()) throw ParseError(line_no, col + 1, "variables declared twice", {});
      for (auto [piece, off] : split_commas(rest, rest_col)) {
        std::size_t c = off;
        auto name = trim(piece, &c);
        if (!is_identifier(name)) throw ParseError(line_no, c + 1, "bad variable name", {"<identifier>"});
        if (std::find(vars.begin(), vars.end(), name) != vars.end())
          throw ParseError(line_no, c + 1, "duplicate variable '" + std::string(name) + "'", {});
        vars.emplace_back(name);
      }
      if (vars.empty()) throw ParseError(line_no, rest_col + 1, "no variables", {"<identifier>"});
    } else if (colon && (word == "base" || word == "module" || word == "q" || word == "a")) {
      pending.push_back({word, std::string(rest), line_no, rest_col});
    } else if (word == "set" && !colon) {
      auto eq = rest.find('=');
      if (eq == std::string_view::npos)
        throw ParseError(line_no, rest_col + rest.size() + 1, "expected '='", {"="});
      std::size_t kc = rest_col, vc = rest_col + eq + 1;
      auto key = trim(rest.substr(0, eq), &kc);
      auto value = trim(rest.substr(eq + 1), &vc);
      const auto& keys = session_keys();
      if (std::find(keys.begin(), keys.end(), key) == keys.end())
        throw ParseError(line_no, kc + 1, "unknown parameter '" + std::string(key) + "'", keys);
      try {
        set_parameter(spec.params, key, value);
      } catch (const InputError& e) {
        throw ParseError(line_no, vc + 1, e.what(), {"<natural>"});
      }
    } else {
      throw ParseError(line_no, col + 1, "unknown directive '" + word + "'", kDirectives);
    }
    if (end == text.size()) break;
  }

  if (vars.empty()) throw ParseError(line_no, 1, "missing variable declaration", {"vars"});
  spec.ring = Ring::make(field.value_or(Field::rationals()), vars);
  for (const auto& p : pending) {
    auto& ring = spec.ring;
    if (p.key == "a") {
      for (auto [piece, off] : split_commas(p.body, p.column)) {
        std::size_t c = off;
        auto item = trim(piece, &c);
        std::optional<unsigned> claimed;
        if (auto at = item.find('@'); at != std::string_view::npos) {
          std::size_t dc = c + at + 1;
          auto deg = parse_uint(trim(item.substr(at + 1), &dc));
          if (!deg || *deg > 100000) throw ParseError(p.line, dc + 1, "expected a degree", {"<natural>"});
          claimed = static_cast<unsigned>(*deg);
          item = trim(item.substr(0, at));
        }
        if (item.empty()) throw ParseError(p.line, c + 1, "empty element", {"<expression>"});
        auto f = parse_polynomial(item, ring, p.line, c);
        if (f.is_zero()) throw ParseError(p.line, c + 1, "system element is zero", {"<expression>"});
        spec.system.push_back({f, claimed});
      }
      continue;
    }
    auto list = parse_polynomial_list(p.body, ring, p.line, p.column);
    auto& target = p.key == "base" ? spec.base : p.key == "module" ? spec.module : spec.q;
    for (auto& f : list)
      if (!f.is_zero()) target.push_back(std::move(f));
  }
  if (validate) build_context(spec);
  return spec;
}

std::string print_session(const SessionSpec& spec) {
  auto join = [](const std::vector<Polynomial>& v) {
    if (v.empty()) return std::string("0");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s;
  };
  std::string out = "field " + spec.ring->field().name() + "\nvars ";
  const auto& names = spec.ring->names();
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  out += "\nbase: " + join(spec.base) + "\nmodule: " + join(spec.module) + "\nq: " + join(spec.q) + "\n";
  for (const auto& a : spec.system) {
    out += "a: " + a.element.str();
    if (a.degree) out += " @ " + std::to_string(*a.degree);
    out += "\n";
  }
  const SessionParams& p = spec.params;
  std::vector<std::pair<std::string, std::uint64_t>> kv{
      {"n_max", p.n_max},         {"l_max", p.l_max},
      {"window", p.window},       {"degree_cap", p.degree_cap},
      {"probe_cap", p.probe_cap}, {"search_random", p.search_random},
      {"search_extra_degree", p.search_extra_degree}, {"max_reductions", p.max_reductions}};
  for (const auto& [k, v] : kv) out += "set " + k + " = " + std::to_string(v) + "\n";
  return out;
}

FiltrationContext build_context(const SessionSpec& spec) {
  FiltrationParams fp;
  fp.probe_cap = spec.params.probe_cap;
  fp.gb.max_reductions = spec.params.max_reductions;
  return FiltrationContext::make(spec.ring, spec.base, spec.module, spec.q, spec.system, fp);
}

LZeroParams lzero_params(const SessionParams& p) {
  LZeroParams lp;
  lp.n_max = p.n_max;
  lp.l_max = p.l_max;
  lp.window = p.window;
  lp.search_random = p.search_random;
  lp.search_extra_degree = p.search_extra_degree;
  return lp;
}

}  // namespace formcone
