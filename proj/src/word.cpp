#include "jgarside/word.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string_view>

#include "jgarside/errors.hpp"

namespace jgar {

bool Word::starts_with(Word const& p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

std::size_t Word::count(Letter s) const {
  return static_cast<std::size_t>(std::count(begin(), end(), s));
}

Word Word::power(Word const& w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  auto const& v = w.letters();
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<char const*>(v.data()), v.size()));
}

bool shortlex_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Letter Presentation::add_letter(std::string name, unsigned weight) {
  if (find(name)) throw InputError("duplicate letter '" + name + "'");
  if (name.empty() || name == "1" || name.find_first_of(".= \t^") != std::string::npos)
    throw InputError("invalid letter name '" + name + "'");
  if (names_.size() >= 255) throw InputError("alphabet too large");
  if (weight == 0) throw InputError("weights must be positive");
  names_.push_back(std::move(name));
  weights_.push_back(weight);
  return static_cast<Letter>(names_.size() - 1);
}

void Presentation::set_weight(Letter s, unsigned weight) {
  if (weight == 0) throw InputError("weights must be positive");
  weights_.at(s) = weight;
}

void Presentation::add_relation(Word lhs, Word rhs) {
  relations_.push_back({std::move(lhs), std::move(rhs)});
}

void Presentation::add_relation(std::string_view lhs, std::string_view rhs) {
  add_relation(parse_word(lhs), parse_word(rhs));
}

std::optional<Letter> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Presentation::letter(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw InputError("unknown letter '" + std::string(name) + "'");
}

unsigned long Presentation::weight(Word const& w) const {
  unsigned long total = 0;
  for (Letter s : w) total += s < weights_.size() ? weights_[s] : 0;
  return total;
}

namespace {

std::string_view trim(std::string_view s) {
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Word Presentation::parse_word(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw InputError("empty word text (write 1 for the identity)");
  Word w;
  if (text == "1") return w;
  for (auto part : split(text, '.')) {
    part = trim(part);
    if (part.empty()) throw InputError("malformed word '" + std::string(text) + "'");
    w.push_back(letter(part));
  }
  return w;
}

std::string Presentation::format(Word const& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += w[i] < names_.size() ? names_[w[i]] : "?" + std::to_string(w[i]);
  }
  return out;
}

std::string Presentation::format(Relation const& r) const {
  return format(r.lhs) + " = " + format(r.rhs);
}

LetterSet Presentation::all_letters() const {
  LetterSet out;
  for (std::size_t i = 0; i < size(); ++i) out.insert(static_cast<Letter>(i));
  return out;
}

ValidationReport validate_presentation(Presentation const& p) {
  ValidationReport rep;
  auto issue = [&](std::string msg) {
    rep.valid = false;
    rep.issues.push_back(std::move(msg));
  };
  std::set<std::string> seen;
  for (auto const& n : p.names())
    if (!seen.insert(n).second) issue("duplicate letter '" + n + "'");
  std::set<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    auto const& r = p.relations()[i];
    auto tag = "relation " + std::to_string(i + 1);
    bool ok = true;
    for (auto const* side : {&r.lhs, &r.rhs}) {
      for (Letter s : *side)
        if (s >= p.size()) {
          issue(tag + ": unknown letter id " + std::to_string(s));
          ok = false;
          break;
        }
    }
    if (r.lhs.empty() || r.rhs.empty()) issue(tag + ": empty relation side");
    if (!ok) continue;
    auto key = std::minmax(r.lhs, r.rhs);
    if (!pairs.insert({key.first, key.second}).second)
      issue(tag + ": duplicate relation " + p.format(r));
  }
  return rep;
}

bool is_homogeneous(Presentation const& p) {
  return std::all_of(p.relations().begin(), p.relations().end(), [&](Relation const& r) {
    return p.weight(r.lhs) == p.weight(r.rhs);
  });
}

Presentation opposite_presentation(Presentation const& p) {
  Presentation out = p;
  for (auto& r : out.relations()) {
    r.lhs = r.lhs.reversed();
    r.rhs = r.rhs.reversed();
  }
  return out;
}

Word remove_letters(Word const& w, LetterSet const& X) {
  Word out;
  for (Letter s : w)
    if (!X.count(s)) out.push_back(s);
  return out;
}

QuotientPresentation remove_letters(Presentation const& p, LetterSet const& X) {
  QuotientPresentation q;
  std::vector<Letter> newid(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto s = static_cast<Letter>(i);
    if (X.count(s)) continue;
    newid[i] = q.presentation.add_letter(p.name(s), p.weight(s));
    q.kept.push_back(s);
  }
  auto map = [&](Word const& w) {
    Word out;
    for (Letter s : w)
      if (!X.count(s)) out.push_back(newid[s]);
    return out;
  };
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    auto const& r = p.relations()[i];
    Word l = map(r.lhs), rr = map(r.rhs);
    if (l.empty() || rr.empty()) q.empty_sided.push_back(i);
    else if (l == rr) q.trivial.push_back(i);
    q.presentation.add_relation(std::move(l), std::move(rr));
  }
  return q;
}

Presentation drop_trivial(Presentation const& p) {
  Presentation out = p;
  out.relations().clear();
  std::set<std::pair<Word, Word>> seen;
  for (auto const& r : p.relations()) {
    if (r.lhs == r.rhs) continue;
    auto key = std::minmax(r.lhs, r.rhs);
    if (seen.insert({key.first, key.second}).second) out.add_relation(r.lhs, r.rhs);
  }
  return out;
}

Word relabel(Word const& w, std::vector<Letter> const& perm) {
  Word out;
  for (Letter s : w) out.push_back(perm.at(s));
  return out;
}

Presentation relabel(Presentation const& p, std::vector<Letter> const& perm) {
  Presentation out = p;
  for (auto& r : out.relations()) {
    r.lhs = relabel(r.lhs, perm);
    r.rhs = relabel(r.rhs, perm);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::vector<std::vector<std::string_view>> rels;
  std::size_t lineno = 0;
  for (auto raw : split(text, '\n')) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto sp = line.find_first_of(" \t");
    auto head = line.substr(0, sp);
    auto rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    auto where = " (line " + std::to_string(lineno) + ")";
    if (head == "letter") {
      if (rest.empty()) throw InputError("missing letter name" + where);
      p.add_letter(std::string(rest));
    } else if (head == "weight") {
      auto sp2 = rest.find_first_of(" \t");
      if (sp2 == std::string_view::npos) throw InputError("malformed weight line" + where);
      auto name = rest.substr(0, sp2);
      auto value = std::string(trim(rest.substr(sp2)));
      long k = 0;
      try {
        std::size_t used = 0;
        k = std::stol(value, &used);
        if (used != value.size()) k = 0;
      } catch (std::exception const&) {
        k = 0;
      }
      if (k <= 0) throw InputError("weight must be a positive integer" + where);
      p.set_weight(p.letter(name), static_cast<unsigned>(k));
    } else if (head == "rel") {
      auto sides = split(rest, '=');
      if (sides.size() < 2) throw InputError("relation needs '='" + where);
      rels.push_back(sides);
    } else {
      throw InputError("unknown directive '" + std::string(head) + "'" + where);
    }
  }
  // Relations may mention letters declared later in the file.
  for (auto const& sides : rels)
    for (std::size_t i = 0; i + 1 < sides.size(); ++i)
      p.add_relation(sides[i], sides[i + 1]);
  return p;
}

std::string serialize(Presentation const& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "letter " << p.names()[i] << '\n';
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.weights()[i] != 1) out << "weight " << p.names()[i] << ' ' << p.weights()[i] << '\n';
  for (auto const& r : p.relations()) out << "rel " << p.format(r) << '\n';
  return out.str();
}

std::string canonical_form(Presentation const& p) {
  // Union-find over the distinct words appearing in relations.
  std::map<Word, std::size_t> index;
  std::vector<Word> words;
  auto id = [&](Word const& w) {
    auto [it, fresh] = index.emplace(w, words.size());
    if (fresh) words.push_back(w);
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto const& r : p.relations()) {
    if (r.lhs == r.rhs) continue;
    auto a = id(r.lhs);
    auto b = id(r.rhs);
    edges.emplace_back(a, b);
  }
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (auto [a, b] : edges) parent[root(a)] = root(b);
  std::map<std::size_t, std::vector<Word>> comps;
  for (std::size_t i = 0; i < words.size(); ++i) comps[root(i)].push_back(words[i]);
  std::vector<std::vector<Word>> chains;
  for (auto& [r, ws] : comps) {
    std::sort(ws.begin(), ws.end(), shortlex_less);
    chains.push_back(std::move(ws));
  }
  std::sort(chains.begin(), chains.end(), [](auto const& a, auto const& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), shortlex_less);
  });
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "letter " << p.names()[i];
    if (p.weights()[i] != 1) out << " weight " << p.weights()[i];
    out << '\n';
  }
  for (auto const& chain : chains) {
    out << "rel ";
    for (std::size_t i = 0; i < chain.size(); ++i) out << (i ? " = " : "") << p.format(chain[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace jgar
