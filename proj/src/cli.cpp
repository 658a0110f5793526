#include "chu/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "CLI11.hpp"

namespace chu {
namespace {

namespace fs = std::filesystem;

// ---- lines ------------------------------------------------------------

struct KvLine {
  int no = 0;
  std::string key, value;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// A line is `key: value`. The separator is the first ':' followed by
// whitespace or end of line, so tagged elements like L:a survive inside
// keys and values. Blank lines and '#' comments are skipped.
std::vector<KvLine> split_lines(const std::string& text) {
  std::vector<KvLine> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t sep = std::string::npos;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] != ':') continue;
      if (i + 1 == line.size() || line[i + 1] == ' ' || line[i + 1] == '\t') {
        sep = i;
        break;
      }
    }
    if (sep == std::string::npos) throw ParseError(no, "expected 'key: value'");
    KvLine l;
    l.no = no;
    l.key = trim(line.substr(0, sep));
    l.value = trim(line.substr(sep + 1));
    if (l.key.empty()) throw ParseError(no, "empty key");
    out.push_back(std::move(l));
  }
  return out;
}

template <class F>
auto guarded(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

// ---- element grammar --------------------------------------------------

// Mirrors to_string: atoms, (a,b), L:x, R:x, {k->v,...}, [a,b].
struct Scanner {
  const std::string& s;
  std::size_t pos = 0;
  int line = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(line, why);
  }
  void expect(char c) {
    if (done() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  void expect_arrow() {
    if (s.compare(pos, 2, "->") != 0) fail("expected '->'");
    pos += 2;
  }
  void skip_spaces() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
};

bool atom_break(char c) {
  switch (c) {
    case '(':
    case ')':
    case '{':
    case '}':
    case '[':
    case ']':
    case ',':
    case ':':
    case ' ':
    case '\t':
      return true;
    default:
      return false;
  }
}

Element parse_element(Scanner& sc) {
  if (sc.done()) sc.fail("expected an element");
  char c = sc.peek();
  if ((c == 'L' || c == 'R') && sc.pos + 1 < sc.s.size() &&
      sc.s[sc.pos + 1] == ':') {
    sc.pos += 2;
    Element inner = parse_element(sc);
    return c == 'L' ? inl(std::move(inner)) : inr(std::move(inner));
  }
  if (c == '(') {
    ++sc.pos;
    Element a = parse_element(sc);
    sc.expect(',');
    Element b = parse_element(sc);
    sc.expect(')');
    return pair(std::move(a), std::move(b));
  }
  if (c == '{') {
    ++sc.pos;
    std::vector<std::pair<Element, Element>> entries;
    if (!sc.done() && sc.peek() != '}') {
      for (;;) {
        Element k = parse_element(sc);
        sc.expect_arrow();
        Element v = parse_element(sc);
        entries.emplace_back(std::move(k), std::move(v));
        if (!sc.done() && sc.peek() == ',') {
          ++sc.pos;
          continue;
        }
        break;
      }
    }
    sc.expect('}');
    return guarded(sc.line, [&] { return fn_table(std::move(entries)); });
  }
  if (c == '[') {
    ++sc.pos;
    std::vector<Element> members;
    if (!sc.done() && sc.peek() != ']') {
      for (;;) {
        members.push_back(parse_element(sc));
        if (!sc.done() && sc.peek() == ',') {
          ++sc.pos;
          continue;
        }
        break;
      }
    }
    sc.expect(']');
    return guarded(sc.line, [&] { return cls(std::move(members)); });
  }
  std::size_t start = sc.pos;
  while (!sc.done()) {
    char ch = sc.peek();
    if (atom_break(ch)) break;
    if (ch == '-' && sc.pos + 1 < sc.s.size() && sc.s[sc.pos + 1] == '>') break;
    ++sc.pos;
  }
  if (sc.pos == start) sc.fail(std::string("unexpected character '") + c + "'");
  return atom(sc.s.substr(start, sc.pos - start));
}

Element parse_one_element(const KvLine& l) {
  Scanner sc{l.value, 0, l.no};
  sc.skip_spaces();
  Element e = parse_element(sc);
  sc.skip_spaces();
  if (!sc.done()) sc.fail("trailing characters after element");
  return e;
}

std::vector<Element> parse_element_list(const KvLine& l) {
  std::vector<Element> out;
  Scanner sc{l.value, 0, l.no};
  for (;;) {
    sc.skip_spaces();
    if (sc.done()) break;
    out.push_back(parse_element(sc));
    if (!sc.done() && sc.peek() != ' ' && sc.peek() != '\t')
      sc.fail("expected whitespace between elements");
  }
  return out;
}

std::vector<std::pair<Element, Element>> parse_entry_list(const KvLine& l) {
  std::vector<std::pair<Element, Element>> out;
  Scanner sc{l.value, 0, l.no};
  for (;;) {
    sc.skip_spaces();
    if (sc.done()) break;
    Element k = parse_element(sc);
    sc.expect_arrow();
    Element v = parse_element(sc);
    out.emplace_back(std::move(k), std::move(v));
    if (!sc.done() && sc.peek() != ' ' && sc.peek() != '\t')
      sc.fail("expected whitespace between entries");
  }
  return out;
}

// ---- keyed document ----------------------------------------------------

std::string sub(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

struct Ctx {
  std::map<std::string, KvLine> kv;
  std::set<std::string> used;
  std::string base;
  int kind_line = 1;

  const KvLine* find(const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) return nullptr;
    used.insert(key);
    return &it->second;
  }
  const KvLine& need(const std::string& key) {
    const KvLine* l = find(key);
    if (!l) throw ParseError(kind_line, "missing key '" + key + "'");
    return *l;
  }
};

FinMap build_map(const KvLine& l, const FinSet& dom, const FinSet& cod) {
  auto entries = parse_entry_list(l);
  return guarded(l.no, [&] { return make_fin_map(dom, cod, entries); });
}

Document load_document(Ctx& c, const KvLine& l);

ChuSpace parse_space_at(Ctx& c, const std::string& p) {
  if (!p.empty()) {
    if (const KvLine* l = c.find(p)) {
      Document d = load_document(c, *l);
      if (d.kind != "space")
        throw ParseError(l->no, "expected a space file, got " + d.kind);
      return *d.space;
    }
  }
  const KvLine& gl = c.need(sub(p, "gamma"));
  Alphabet gamma = guarded(
      gl.no, [&] { return make_alphabet(make_fin_set(parse_element_list(gl))); });
  const KvLine& cl = c.need(sub(p, "carrier"));
  FinSet carrier =
      guarded(cl.no, [&] { return make_fin_set(parse_element_list(cl)); });
  const KvLine& xl = c.need(sub(p, "cocarrier"));
  FinSet cocarrier =
      guarded(xl.no, [&] { return make_fin_set(parse_element_list(xl)); });
  std::vector<Element> matrix;
  matrix.reserve(carrier.size() * cocarrier.size());
  for (const Element& a : carrier.elems) {
    const KvLine& rl = c.need(sub(p, "row " + to_string(a)));
    auto vals = parse_element_list(rl);
    if (vals.size() != cocarrier.size())
      throw ParseError(rl.no, "row needs " + std::to_string(cocarrier.size()) +
                                  " entries, got " +
                                  std::to_string(vals.size()));
    for (auto& v : vals) matrix.push_back(std::move(v));
  }
  return guarded(cl.no, [&] {
    return make_space(std::move(gamma), std::move(carrier),
                      std::move(cocarrier), std::move(matrix));
  });
}

// A stem with known endpoints: either a path to a transform file whose
// endpoints must match, or fwd/bwd entry lists. Adjointness is not checked.
ChuTransform parse_stem(Ctx& c, const std::string& p, const ChuSpace& dom,
                        const ChuSpace& cod) {
  if (const KvLine* l = c.find(p)) {
    Document d = load_document(c, *l);
    if (d.kind != "transform")
      throw ParseError(l->no, "expected a transform file, got " + d.kind);
    if (!(d.transform->dom == dom) || !(d.transform->cod == cod))
      throw ParseError(l->no, "transform endpoints do not match");
    return *d.transform;
  }
  const KvLine& fl = c.need(sub(p, "fwd"));
  FinMap fwd = build_map(fl, dom.carrier, cod.carrier);
  const KvLine& bl = c.need(sub(p, "bwd"));
  FinMap bwd = build_map(bl, cod.cocarrier, dom.cocarrier);
  return ChuTransform{dom, cod, std::move(fwd), std::move(bwd)};
}

ChuTransform parse_transform_at(Ctx& c, const std::string& p) {
  if (!p.empty()) {
    if (const KvLine* l = c.find(p)) {
      Document d = load_document(c, *l);
      if (d.kind != "transform")
        throw ParseError(l->no, "expected a transform file, got " + d.kind);
      return *d.transform;
    }
  }
  ChuSpace dom = parse_space_at(c, sub(p, "dom"));
  ChuSpace cod = parse_space_at(c, sub(p, "cod"));
  const KvLine& fl = c.need(sub(p, "fwd"));
  FinMap fwd = build_map(fl, dom.carrier, cod.carrier);
  const KvLine& bl = c.need(sub(p, "bwd"));
  FinMap bwd = build_map(bl, cod.cocarrier, dom.cocarrier);
  return ChuTransform{std::move(dom), std::move(cod), std::move(fwd),
                      std::move(bwd)};
}

SetFunctor parse_set_functor_at(Ctx& c, const std::string& p) {
  const KvLine& l = c.need(p);
  const std::string& tag = l.value;
  auto payload = [&] {
    const KvLine& pl = c.need(sub(p, "payload"));
    return guarded(pl.no, [&] { return make_fin_set(parse_element_list(pl)); });
  };
  if (tag == "Id") return set_id();
  if (tag == "Const") return set_const(payload());
  if (tag == "Times") return set_times(payload());
  if (tag == "Sum") return set_sum(payload());
  if (tag == "Pow") return set_pow(payload(), Budget{});
  if (tag == "Compose")
    return set_compose(parse_set_functor_at(c, sub(p, "outer")),
                       parse_set_functor_at(c, sub(p, "inner")));
  throw ParseError(l.no, "unknown set functor '" + tag + "'");
}

FunctorDescriptor parse_desc_at(Ctx& c, const std::string& p) {
  const KvLine& l = c.need(p);
  const std::string& tag = l.value;
  if (tag == "Id") return desc_id();
  if (tag == "Const") return desc_const(parse_space_at(c, sub(p, "space")));
  if (tag == "With") return desc_with(parse_space_at(c, sub(p, "space")));
  if (tag == "Plus") return desc_plus(parse_space_at(c, sub(p, "space")));
  if (tag == "Tensor")
    return desc_tensor(parse_space_at(c, sub(p, "space")), Budget{});
  if (tag == "Tilde") return desc_tilde(parse_desc_at(c, sub(p, "inner")));
  if (tag == "Compose")
    return desc_compose(parse_desc_at(c, sub(p, "outer")),
                        parse_desc_at(c, sub(p, "inner")));
  if (tag == "Uplift1")
    return desc_uplift1(parse_set_functor_at(c, sub(p, "set")));
  if (tag == "Uplift2")
    return desc_uplift2(parse_set_functor_at(c, sub(p, "set")),
                        parse_one_element(c.need(sub(p, "point"))));
  throw ParseError(l.no, "unknown functor kind '" + tag + "'");
}

Dialgebra parse_dialgebra_at(Ctx& c, const std::string& p) {
  if (!p.empty()) {
    if (const KvLine* l = c.find(p)) {
      Document d = load_document(c, *l);
      if (d.kind != "dialgebra")
        throw ParseError(l->no, "expected a dialgebra file, got " + d.kind);
      return *d.dialgebra;
    }
  }
  FunctorDescriptor f = parse_desc_at(c, sub(p, "f"));
  FunctorDescriptor g = parse_desc_at(c, sub(p, "g"));
  ChuSpace carrier = parse_space_at(c, sub(p, "carrier"));
  ChuSpace fa = guarded(c.kind_line, [&] { return apply_ob(f, carrier); });
  ChuSpace ga = guarded(c.kind_line, [&] { return apply_ob(g, carrier); });
  ChuTransform alpha = parse_stem(c, sub(p, "alpha"), fa, ga);
  return Dialgebra{std::move(f), std::move(g), std::move(carrier),
                   std::move(alpha)};
}

DialgebraHom parse_hom_fields(Ctx& c) {
  Dialgebra dom = parse_dialgebra_at(c, "dom");
  Dialgebra cod = parse_dialgebra_at(c, "cod");
  ChuTransform stem = parse_stem(c, "stem", dom.carrier, cod.carrier);
  return DialgebraHom{std::move(dom), std::move(cod), std::move(stem)};
}

ZeroCell parse_zerocell_at(Ctx& c, const std::string& p) {
  if (!p.empty()) {
    if (const KvLine* l = c.find(p)) {
      Document d = load_document(c, *l);
      if (d.kind != "zerocell")
        throw ParseError(l->no, "expected a zero-cell file, got " + d.kind);
      return *d.zerocell;
    }
  }
  Profile prof{parse_desc_at(c, sub(p, "profile.f")),
               parse_desc_at(c, sub(p, "profile.g")),
               parse_desc_at(c, sub(p, "profile.k")),
               parse_desc_at(c, sub(p, "profile.h"))};
  Dialgebra top = parse_dialgebra_at(c, sub(p, "top"));
  Dialgebra bottom = parse_dialgebra_at(c, sub(p, "bottom"));
  const KvLine& sl = c.need(sub(p, "sigma"));
  FinSet sigma =
      guarded(sl.no, [&] { return make_fin_set(parse_element_list(sl)); });
  DisjointUnion pu = guarded(sl.no, [&] {
    return positive_union(prof, top.carrier, bottom.carrier);
  });
  DisjointUnion nu = guarded(sl.no, [&] {
    return negative_union(prof, top.carrier, bottom.carrier);
  });
  std::vector<std::pair<Element, Element>> pos, neg;
  for (const Element& s : sigma.elems) {
    const KvLine& pl = c.need(sub(p, "pos " + to_string(s)));
    pos.emplace_back(s, parse_one_element(pl));
    const KvLine& nl = c.need(sub(p, "neg " + to_string(s)));
    neg.emplace_back(s, parse_one_element(nl));
  }
  const KvLine& anchor = sl;
  FinMap s_pos =
      guarded(anchor.no, [&] { return make_fin_map(sigma, pu.set, pos); });
  FinMap s_neg =
      guarded(anchor.no, [&] { return make_fin_map(sigma, nu.set, neg); });
  return ZeroCell{std::move(prof), std::move(top), std::move(bottom),
                  SuperMatrix{std::move(sigma), std::move(s_pos),
                              std::move(s_neg)}};
}

HorizontalCell parse_hcell_at(Ctx& c, const std::string& p) {
  if (!p.empty()) {
    if (const KvLine* l = c.find(p)) {
      Document d = load_document(c, *l);
      if (d.kind != "hcell")
        throw ParseError(l->no, "expected a horizontal-cell file, got " + d.kind);
      return *d.hcell;
    }
  }
  ZeroCell src = parse_zerocell_at(c, sub(p, "src"));
  ZeroCell dst = parse_zerocell_at(c, sub(p, "dst"));
  ChuTransform fs = parse_stem(c, sub(p, "f"), src.top.carrier, dst.top.carrier);
  ChuTransform gs =
      parse_stem(c, sub(p, "g"), dst.bottom.carrier, src.bottom.carrier);
  DialgebraHom f{src.top, dst.top, std::move(fs)};
  DialgebraHom g{dst.bottom, src.bottom, std::move(gs)};
  return HorizontalCell{std::move(src), std::move(dst), std::move(f),
                        std::move(g)};
}

VerticalCell parse_vcell_at(Ctx& c, const std::string& p) {
  if (!p.empty()) {
    if (const KvLine* l = c.find(p)) {
      Document d = load_document(c, *l);
      if (d.kind != "vcell")
        throw ParseError(l->no, "expected a vertical-cell file, got " + d.kind);
      return *d.vcell;
    }
  }
  ZeroCell src = parse_zerocell_at(c, sub(p, "src"));
  ZeroCell dst = parse_zerocell_at(c, sub(p, "dst"));
  auto row = [&](const FunctorDescriptor& a, const FunctorDescriptor& b,
                 const ChuSpace& carrier, const std::string& key) {
    ChuSpace from = guarded(c.kind_line, [&] { return apply_ob(a, carrier); });
    ChuSpace to = guarded(c.kind_line, [&] { return apply_ob(b, carrier); });
    return parse_stem(c, sub(p, key), from, to);
  };
  ChuTransform mu = row(src.profile.f, dst.profile.f, src.top.carrier, "mu");
  ChuTransform nu = row(src.profile.g, dst.profile.g, src.top.carrier, "nu");
  ChuTransform theta =
      row(src.profile.k, dst.profile.k, src.bottom.carrier, "theta");
  ChuTransform zeta =
      row(src.profile.h, dst.profile.h, src.bottom.carrier, "zeta");
  return VerticalCell{std::move(src), std::move(dst), std::move(mu),
                      std::move(nu), std::move(theta), std::move(zeta)};
}

Cubicle parse_cubicle_at(Ctx& c, const std::string& p) {
  if (!p.empty()) {
    if (const KvLine* l = c.find(p)) {
      Document d = load_document(c, *l);
      if (d.kind != "cubicle")
        throw ParseError(l->no, "expected a cubicle file, got " + d.kind);
      return *d.cubicle;
    }
  }
  HorizontalCell top = parse_hcell_at(c, sub(p, "top"));
  HorizontalCell bottom = parse_hcell_at(c, sub(p, "bottom"));
  VerticalCell left = parse_vcell_at(c, sub(p, "left"));
  VerticalCell right = parse_vcell_at(c, sub(p, "right"));
  return Cubicle{std::move(top), std::move(bottom), std::move(left),
                 std::move(right)};
}

thread_local int load_depth = 0;

Document load_document(Ctx& c, const KvLine& l) {
  if (l.value.empty()) throw ParseError(l.no, "empty file reference");
  fs::path path = l.value;
  if (path.is_relative()) path = fs::path(c.base) / path;
  if (load_depth > 16) throw ParseError(l.no, "file references nest too deeply");
  ++load_depth;
  struct Guard {
    ~Guard() { --load_depth; }
  } guard;
  try {
    return parse(path.string());
  } catch (const ParseError& e) {
    throw ParseError(l.no, "in " + l.value + ": " + e.what());
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(l.no, "in " + l.value + ": " + e.what());
  }
}

// ---- printing ---------------------------------------------------------

void print_list(std::ostream& os, const std::string& key,
                const std::vector<Element>& elems) {
  os << key << ":";
  for (const Element& e : elems) os << " " << to_string(e);
  os << "\n";
}

void print_map_line(std::ostream& os, const std::string& key, const FinMap& m) {
  os << key << ":";
  for (std::size_t i = 0; i < m.dom.size(); ++i)
    os << " " << to_string(m.dom.elems[i]) << "->" << to_string(m.values[i]);
  os << "\n";
}

void print_space_at(std::ostream& os, const ChuSpace& s, const std::string& p) {
  print_list(os, sub(p, "gamma"), s.gamma.atoms.elems);
  print_list(os, sub(p, "carrier"), s.carrier.elems);
  print_list(os, sub(p, "cocarrier"), s.cocarrier.elems);
  for (std::size_t i = 0; i < s.carrier.size(); ++i) {
    os << sub(p, "row " + to_string(s.carrier.elems[i])) << ":";
    for (std::size_t j = 0; j < s.cocarrier.size(); ++j)
      os << " " << to_string(s.at(i, j));
    os << "\n";
  }
}

void print_stem_at(std::ostream& os, const ChuTransform& t,
                   const std::string& p) {
  print_map_line(os, sub(p, "fwd"), t.forward);
  print_map_line(os, sub(p, "bwd"), t.backward);
}

void print_transform_at(std::ostream& os, const ChuTransform& t,
                        const std::string& p) {
  print_space_at(os, t.dom, sub(p, "dom"));
  print_space_at(os, t.cod, sub(p, "cod"));
  print_stem_at(os, t, p);
}

void print_set_functor_at(std::ostream& os, const SetFunctor& f,
                          const std::string& p) {
  switch (f.kind) {
    case SetFunctor::Kind::Id:
      os << p << ": Id\n";
      return;
    case SetFunctor::Kind::Const:
      os << p << ": Const\n";
      print_list(os, sub(p, "payload"), f.payload.elems);
      return;
    case SetFunctor::Kind::TimesFixed:
      os << p << ": Times\n";
      print_list(os, sub(p, "payload"), f.payload.elems);
      return;
    case SetFunctor::Kind::SumFixed:
      os << p << ": Sum\n";
      print_list(os, sub(p, "payload"), f.payload.elems);
      return;
    case SetFunctor::Kind::PowFixed:
      os << p << ": Pow\n";
      print_list(os, sub(p, "payload"), f.payload.elems);
      return;
    case SetFunctor::Kind::Compose:
      os << p << ": Compose\n";
      print_set_functor_at(os, *f.outer, sub(p, "outer"));
      print_set_functor_at(os, *f.inner, sub(p, "inner"));
      return;
  }
}

void print_desc_at(std::ostream& os, const FunctorDescriptor& d,
                   const std::string& p) {
  switch (d.kind) {
    case FunctorDescriptor::Kind::Id:
      os << p << ": Id\n";
      return;
    case FunctorDescriptor::Kind::Const:
      os << p << ": Const\n";
      print_space_at(os, d.space, sub(p, "space"));
      return;
    case FunctorDescriptor::Kind::WithFixed:
      os << p << ": With\n";
      print_space_at(os, d.space, sub(p, "space"));
      return;
    case FunctorDescriptor::Kind::PlusFixed:
      os << p << ": Plus\n";
      print_space_at(os, d.space, sub(p, "space"));
      return;
    case FunctorDescriptor::Kind::TensorFixed:
      os << p << ": Tensor\n";
      print_space_at(os, d.space, sub(p, "space"));
      return;
    case FunctorDescriptor::Kind::Uplift1:
      os << p << ": Uplift1\n";
      print_set_functor_at(os, d.set_part, sub(p, "set"));
      return;
    case FunctorDescriptor::Kind::Uplift2:
      os << p << ": Uplift2\n";
      print_set_functor_at(os, d.set_part, sub(p, "set"));
      os << sub(p, "point") << ": " << to_string(d.point) << "\n";
      return;
    case FunctorDescriptor::Kind::Compose:
      os << p << ": Compose\n";
      print_desc_at(os, *d.outer, sub(p, "outer"));
      print_desc_at(os, *d.inner, sub(p, "inner"));
      return;
    case FunctorDescriptor::Kind::Tilde:
      os << p << ": Tilde\n";
      print_desc_at(os, *d.inner, sub(p, "inner"));
      return;
  }
}

void print_dialgebra_at(std::ostream& os, const Dialgebra& d,
                        const std::string& p) {
  print_desc_at(os, d.f, sub(p, "f"));
  print_desc_at(os, d.g, sub(p, "g"));
  print_space_at(os, d.carrier, sub(p, "carrier"));
  print_stem_at(os, d.alpha, sub(p, "alpha"));
}

void print_zerocell_at(std::ostream& os, const ZeroCell& z,
                       const std::string& p) {
  print_desc_at(os, z.profile.f, sub(p, "profile.f"));
  print_desc_at(os, z.profile.g, sub(p, "profile.g"));
  print_desc_at(os, z.profile.k, sub(p, "profile.k"));
  print_desc_at(os, z.profile.h, sub(p, "profile.h"));
  print_dialgebra_at(os, z.top, sub(p, "top"));
  print_dialgebra_at(os, z.bottom, sub(p, "bottom"));
  print_list(os, sub(p, "sigma"), z.sm.sigma.elems);
  for (std::size_t i = 0; i < z.sm.sigma.size(); ++i) {
    const std::string name = to_string(z.sm.sigma.elems[i]);
    os << sub(p, "pos " + name) << ": " << to_string(z.sm.s_pos.values[i])
       << "\n";
    os << sub(p, "neg " + name) << ": " << to_string(z.sm.s_neg.values[i])
       << "\n";
  }
}

void print_hcell_at(std::ostream& os, const HorizontalCell& h,
                    const std::string& p) {
  print_zerocell_at(os, h.src, sub(p, "src"));
  print_zerocell_at(os, h.dst, sub(p, "dst"));
  print_stem_at(os, h.f.stem, sub(p, "f"));
  print_stem_at(os, h.g.stem, sub(p, "g"));
}

void print_vcell_at(std::ostream& os, const VerticalCell& v,
                    const std::string& p) {
  print_zerocell_at(os, v.src, sub(p, "src"));
  print_zerocell_at(os, v.dst, sub(p, "dst"));
  print_stem_at(os, v.mu, sub(p, "mu"));
  print_stem_at(os, v.nu, sub(p, "nu"));
  print_stem_at(os, v.theta, sub(p, "theta"));
  print_stem_at(os, v.zeta, sub(p, "zeta"));
}

void print_cubicle_at(std::ostream& os, const Cubicle& c,
                      const std::string& p) {
  print_hcell_at(os, c.top, sub(p, "top"));
  print_hcell_at(os, c.bottom, sub(p, "bottom"));
  print_vcell_at(os, c.left, sub(p, "left"));
  print_vcell_at(os, c.right, sub(p, "right"));
}

}  // namespace

// ---- public api -------------------------------------------------------

Document make_document(ChuSpace s) {
  Document d;
  d.kind = "space";
  d.space = std::move(s);
  return d;
}
Document make_document(ChuTransform t) {
  Document d;
  d.kind = "transform";
  d.transform = std::move(t);
  return d;
}
Document make_document(FunctorDescriptor f) {
  Document d;
  d.kind = "functor";
  d.functor = std::move(f);
  return d;
}
Document make_document(Dialgebra x) {
  Document d;
  d.kind = "dialgebra";
  d.dialgebra = std::move(x);
  return d;
}
Document make_document(DialgebraHom h) {
  Document d;
  d.kind = "hom";
  d.hom = std::move(h);
  return d;
}
Document make_document(ZeroCell z) {
  Document d;
  d.kind = "zerocell";
  d.zerocell = std::move(z);
  return d;
}
Document make_document(HorizontalCell h) {
  Document d;
  d.kind = "hcell";
  d.hcell = std::move(h);
  return d;
}
Document make_document(VerticalCell v) {
  Document d;
  d.kind = "vcell";
  d.vcell = std::move(v);
  return d;
}
Document make_document(Cubicle c) {
  Document d;
  d.kind = "cubicle";
  d.cubicle = std::move(c);
  return d;
}

Document parse_text(const std::string& text, const std::string& base_dir) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty document");
  Ctx c;
  for (const KvLine& l : lines)
    if (!c.kv.emplace(l.key, l).second)
      throw ParseError(l.no, "duplicate key '" + l.key + "'");
  if (lines.front().key != "kind")
    throw ParseError(lines.front().no, "first entry must be 'kind'");
  c.kind_line = lines.front().no;
  c.base = base_dir.empty() ? "." : base_dir;
  Document d;
  d.kind = c.need("kind").value;
  if (d.kind == "space") {
    d.space = parse_space_at(c, "");
  } else if (d.kind == "transform") {
    d.transform = parse_transform_at(c, "");
  } else if (d.kind == "functor") {
    d.functor = parse_desc_at(c, "desc");
  } else if (d.kind == "dialgebra") {
    d.dialgebra = parse_dialgebra_at(c, "");
  } else if (d.kind == "hom") {
    d.hom = parse_hom_fields(c);
  } else if (d.kind == "zerocell") {
    d.zerocell = parse_zerocell_at(c, "");
  } else if (d.kind == "hcell") {
    d.hcell = parse_hcell_at(c, "");
  } else if (d.kind == "vcell") {
    d.vcell = parse_vcell_at(c, "");
  } else if (d.kind == "cubicle") {
    d.cubicle = parse_cubicle_at(c, "");
  } else {
    throw ParseError(c.kind_line, "unknown kind '" + d.kind + "'");
  }
  for (const KvLine& l : lines)
    if (!c.used.count(l.key))
      throw ParseError(l.no, "unknown key '" + l.key + "'");
  return d;
}

Document parse(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), fs::path(path).parent_path().string());
}

std::string print(const Document& d) {
  std::ostringstream os;
  os << "kind: " << d.kind << "\n";
  if (d.kind == "space") {
    print_space_at(os, *d.space, "");
  } else if (d.kind == "transform") {
    print_transform_at(os, *d.transform, "");
  } else if (d.kind == "functor") {
    print_desc_at(os, *d.functor, "desc");
  } else if (d.kind == "dialgebra") {
    print_dialgebra_at(os, *d.dialgebra, "");
  } else if (d.kind == "hom") {
    print_dialgebra_at(os, d.hom->dom, "dom");
    print_dialgebra_at(os, d.hom->cod, "cod");
    print_stem_at(os, d.hom->stem, "stem");
  } else if (d.kind == "zerocell") {
    print_zerocell_at(os, *d.zerocell, "");
  } else if (d.kind == "hcell") {
    print_hcell_at(os, *d.hcell, "");
  } else if (d.kind == "vcell") {
    print_vcell_at(os, *d.vcell, "");
  } else if (d.kind == "cubicle") {
    print_cubicle_at(os, *d.cubicle, "");
  } else {
    throw InputError("unknown kind '" + d.kind + "'");
  }
  return os.str();
}

void validate(const Document& d) {
  if (d.kind == "space") {
    make_space(d.space->gamma, d.space->carrier, d.space->cocarrier,
               d.space->matrix);
  } else if (d.kind == "transform") {
    make_transform(d.transform->dom, d.transform->cod, d.transform->forward,
                   d.transform->backward);
  } else if (d.kind == "functor") {
    variance(*d.functor);
  } else if (d.kind == "dialgebra") {
    make_dialgebra(d.dialgebra->f, d.dialgebra->g, d.dialgebra->carrier,
                   d.dialgebra->alpha);
  } else if (d.kind == "hom") {
    make_hom(d.hom->dom, d.hom->cod, d.hom->stem);
  } else if (d.kind == "zerocell") {
    make_zero_cell(d.zerocell->profile, d.zerocell->top, d.zerocell->bottom,
                   d.zerocell->sm);
  } else if (d.kind == "hcell") {
    make_horizontal(d.hcell->src, d.hcell->dst, d.hcell->f, d.hcell->g);
  } else if (d.kind == "vcell") {
    make_vertical(d.vcell->src, d.vcell->dst, d.vcell->mu, d.vcell->nu,
                  d.vcell->theta, d.vcell->zeta);
  } else if (d.kind == "cubicle") {
    make_cubicle(d.cubicle->top, d.cubicle->left, d.cubicle->right,
                 d.cubicle->bottom);
  } else {
    throw InputError("unknown kind '" + d.kind + "'");
  }
}

// ---- commands ---------------------------------------------------------

namespace {

Budget resolve_budget(long long flag) {
  Budget b;
  if (flag > 0) {
    b.max_functions = flag;
    return b;
  }
  if (const char* e = std::getenv("CHU_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(e, &end, 10);
    if (end == e || *end != '\0' || v <= 0)
      throw InputError("CHU_BUDGET must be a positive integer");
    b.max_functions = v;
  }
  return b;
}

ChuSpace parse_space_file(const std::string& path) {
  Document d = parse(path);
  if (d.kind != "space") throw InputError(path + " is not a space file");
  return *d.space;
}

ChuTransform parse_transform_file(const std::string& path) {
  Document d = parse(path);
  if (d.kind != "transform")
    throw InputError(path + " is not a transform file");
  return make_transform(d.transform->dom, d.transform->cod,
                        d.transform->forward, d.transform->backward);
}

FunctorDescriptor parse_functor_file(const std::string& path) {
  Document d = parse(path);
  if (d.kind != "functor") throw InputError(path + " is not a functor file");
  return *d.functor;
}

Dialgebra parse_dialgebra_file(const std::string& path) {
  Document d = parse(path);
  if (d.kind != "dialgebra")
    throw InputError(path + " is not a dialgebra file");
  return make_dialgebra(d.dialgebra->f, d.dialgebra->g, d.dialgebra->carrier,
                        d.dialgebra->alpha);
}

DialgebraHom parse_hom_file(const std::string& path) {
  Document d = parse(path);
  if (d.kind != "hom") throw InputError(path + " is not a hom file");
  return make_hom(d.hom->dom, d.hom->cod, d.hom->stem);
}

ZeroCell parse_cell_file(const std::string& path) {
  Document d = parse(path);
  if (d.kind != "zerocell") throw InputError(path + " is not a cell file");
  return make_zero_cell(d.zerocell->profile, d.zerocell->top,
                        d.zerocell->bottom, d.zerocell->sm);
}

VerticalCell parse_vcell_file(const std::string& path) {
  Document d = parse(path);
  if (d.kind != "vcell")
    throw InputError(path + " is not a vertical-cell file");
  return make_vertical(d.vcell->src, d.vcell->dst, d.vcell->mu, d.vcell->nu,
                       d.vcell->theta, d.vcell->zeta);
}

std::vector<fs::path> sorted_files(const std::string& dir,
                                   const std::set<std::string>& exts) {
  if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (exts.count(entry.path().extension().string())) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  Document d = parse(file);
  validate(d);
  out << "valid " << d.kind << "\n";
  return 0;
}

int cmd_dual(const std::string& file, std::ostream& out) {
  Document d = parse(file);
  if (d.kind == "space") {
    out << print(make_document(dual(*d.space)));
  } else if (d.kind == "transform") {
    validate(d);
    out << print(make_document(dual_transform(*d.transform)));
  } else {
    throw InputError("dual expects a space or transform, got " + d.kind);
  }
  return 0;
}

int cmd_collapse(const std::string& file, std::ostream& out) {
  ChuSpace a = parse_space_file(file);
  Collapse c = collapse(a);
  out << "# carrier " << a.carrier.size() << " -> " << c.space.carrier.size()
      << "\n";
  out << "# cocarrier " << a.cocarrier.size() << " -> "
      << c.space.cocarrier.size() << "\n";
  out << print(make_document(c.space));
  return 0;
}

int cmd_homcount(const std::string& fa, const std::string& fb,
                 const Budget& bud, std::ostream& out) {
  out << hom_count(parse_space_file(fa), parse_space_file(fb), bud) << "\n";
  return 0;
}

int cmd_check(const std::string& pred, const std::string& file,
              std::ostream& out) {
  Document d = parse(file);
  bool v = false;
  if (pred == "extensional" || pred == "separable" ||
      pred == "biextensional" || pred == "topological") {
    if (d.kind != "space") throw InputError(pred + " expects a space file");
    if (pred == "extensional") v = is_extensional(*d.space);
    else if (pred == "separable") v = is_separable(*d.space);
    else if (pred == "biextensional") v = is_biextensional(*d.space);
    else v = is_topological(*d.space);
  } else {
    if (d.kind != "transform")
      throw InputError(pred + " expects a transform file");
    validate(d);
    if (pred == "monic") {
      v = is_monic(*d.transform);
    } else if (pred == "epic") {
      v = is_epic(*d.transform);
    } else {
      try {
        invert(*d.transform);
        v = true;
      } catch (const NotBijective&) {
        v = false;
      }
    }
  }
  out << pred << ": " << (v ? "true" : "false") << "\n";
  return v ? 0 : 1;
}

int cmd_conn_binary(const std::string& op, const std::string& fa,
                    const std::string& fb, const Budget& bud,
                    std::ostream& out) {
  ChuSpace a = parse_space_file(fa);
  ChuSpace b = parse_space_file(fb);
  ChuSpace r;
  if (op == "tensor") r = tensor(a, b, bud);
  else if (op == "par") r = par(a, b, bud);
  else if (op == "with") r = with_(a, b).space;
  else if (op == "plus") r = plus(a, b).space;
  else r = lolli(a, b, bud);
  out << print(make_document(std::move(r)));
  return 0;
}

int cmd_conn_unit(const std::string& which,
                  const std::vector<std::string>& symbols, std::ostream& out) {
  Alphabet g = make_alphabet(symbols.empty()
                                 ? std::vector<std::string>{"0", "1"}
                                 : symbols);
  ChuSpace r;
  if (which == "i") r = unit_i(g);
  else if (which == "perp") r = perp(g);
  else if (which == "zero") r = zero(g);
  else r = top(g);
  out << print(make_document(std::move(r)));
  return 0;
}

int cmd_conn_curry(const std::string& fh, const std::string& fa,
                   const std::string& fb, const std::string& fc,
                   const Budget& bud, std::ostream& out) {
  ChuTransform h = parse_transform_file(fh);
  ChuSpace a = parse_space_file(fa);
  ChuSpace b = parse_space_file(fb);
  ChuSpace c = parse_space_file(fc);
  out << print(make_document(curry(h, a, b, c, bud)));
  return 0;
}

int cmd_conn_doubledual(const std::string& fa, const Budget& bud,
                        std::ostream& out) {
  DoubleDual dd = canonical_double_dual(parse_space_file(fa), bud);
  out << "iso: " << (dd.iso ? "true" : "false") << "\n";
  out << print(make_document(dd.d));
  return dd.iso ? 0 : 1;
}

int cmd_conn_equalizer(const std::string& ff, const std::string& fg,
                       std::ostream& out) {
  Equalized e = equalizer(parse_transform_file(ff), parse_transform_file(fg));
  out << print(make_document(e.arrow));
  return 0;
}

int cmd_conn_pullback(const std::string& ff, const std::string& fg,
                      std::ostream& out) {
  PullbackResult r =
      pullback(parse_transform_file(ff), parse_transform_file(fg));
  out << "# apex of the pullback square; projections target the two domains\n";
  out << print(make_document(r.space));
  return 0;
}

int cmd_functor_apply(const std::string& ff, const std::string& fx,
                      std::ostream& out) {
  FunctorDescriptor f = parse_functor_file(ff);
  Document d = parse(fx);
  if (d.kind == "space") {
    out << print(make_document(apply_ob(f, *d.space)));
  } else if (d.kind == "transform") {
    validate(d);
    out << print(make_document(apply_mor(f, *d.transform)));
  } else {
    throw InputError("apply expects a space or transform, got " + d.kind);
  }
  return 0;
}

int cmd_functor_laws(const std::string& ff, const std::string& f1,
                     const std::string& f2, std::ostream& out) {
  FunctorDescriptor f = parse_functor_file(ff);
  LawReport r = check_functor_laws(
      f, {{parse_transform_file(f1), parse_transform_file(f2)}});
  out << "identity checks: " << r.identity_checks << "\n";
  out << "composite checks: " << r.composite_checks << "\n";
  for (const std::string& v : r.violations) out << "violation: " << v << "\n";
  out << "result: " << (r.ok() ? "pass" : "fail") << "\n";
  return r.ok() ? 0 : 1;
}

int cmd_functor_uplift(const std::string& ff,
                       const std::vector<std::string>& samples,
                       std::ostream& out) {
  FunctorDescriptor f = parse_functor_file(ff);
  if (f.kind != FunctorDescriptor::Kind::Uplift1 &&
      f.kind != FunctorDescriptor::Kind::Uplift2)
    throw InputError("uplift-check expects an Uplift1 or Uplift2 functor");
  std::vector<ChuTransform> ts;
  for (const std::string& s : samples) ts.push_back(parse_transform_file(s));
  bool ok = check_uplifting(f, f.set_part, ts);
  out << "uplifting: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_functor_preserves(const std::string& what, const std::string& ff,
                          const std::string& fx, const std::string& fy,
                          const Budget& bud, std::ostream& out) {
  FunctorDescriptor f = parse_functor_file(ff);
  bool ok;
  if (what == "products") {
    ok = check_preserves_binary_products(f, parse_space_file(fx),
                                         parse_space_file(fy), bud);
  } else if (what == "coproducts") {
    ok = check_preserves_binary_coproducts(f, parse_space_file(fx),
                                           parse_space_file(fy), bud);
  } else {
    ok = check_preserves_pullbacks(f, parse_transform_file(fx),
                                   parse_transform_file(fy), bud);
  }
  out << "preserved: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_dialg_hom(const std::string& f1, const std::string& f2,
                  const Budget& bud, std::ostream& out) {
  out << dialgebra_hom_set(parse_dialgebra_file(f1), parse_dialgebra_file(f2),
                           bud)
             .size()
      << "\n";
  return 0;
}

int cmd_dialg_product(bool coproduct, const std::string& f1,
                      const std::string& f2, const Budget& bud,
                      std::ostream& out) {
  Dialgebra d1 = parse_dialgebra_file(f1);
  Dialgebra d2 = parse_dialgebra_file(f2);
  Dialgebra object = coproduct ? coproduct_dialgebra(d1, d2, bud).object
                               : product_dialgebra(d1, d2, bud).object;
  out << print(make_document(std::move(object)));
  return 0;
}

int cmd_dialg_bisim(const std::string& f1, const std::string& f2,
                    const Budget& bud, std::ostream& out) {
  Bisimulation b =
      pullback_bisimulation(parse_hom_file(f1), parse_hom_file(f2), bud);
  out << "bisimulation carrier: " << b.relation.object.carrier.size() << "\n";
  out << "result: ok\n";
  return 0;
}

int cmd_dialg_graph(const std::string& ft, const std::string& f1,
                    const std::string& f2, const Budget& bud,
                    std::ostream& out) {
  HomGraphCheck c =
      check_hom_iff_graph(parse_transform_file(ft), parse_dialgebra_file(f1),
                          parse_dialgebra_file(f2), bud);
  out << "hom: " << (c.is_hom ? "true" : "false") << "\n";
  out << "graph: " << (c.graph_bisim_exists ? "true" : "false") << "\n";
  bool agree = c.is_hom == c.graph_bisim_exists;
  out << "agree: " << (agree ? "true" : "false") << "\n";
  return agree ? 0 : 1;
}

int cmd_dialg_tilde(const std::string& f1, std::ostream& out) {
  TildeDialgebra t = tilde_dialgebra(parse_dialgebra_file(f1));
  out << print(make_document(t.structure));
  return 0;
}

Document parse_validated(const std::string& file) {
  Document d = parse(file);
  validate(d);
  return d;
}

int cmd_dlc_compose(const std::string& f1, const std::string& f2,
                    const std::string& dir, std::ostream& out) {
  Document a = parse_validated(f1);
  Document b = parse_validated(f2);
  if (a.kind != b.kind)
    throw InputError("compose needs two cells of the same kind");
  if (a.kind == "hcell") {
    out << print(make_document(compose_horizontal(*a.hcell, *b.hcell)));
  } else if (a.kind == "vcell") {
    out << print(make_document(compose_vertical(*a.vcell, *b.vcell)));
  } else if (a.kind == "cubicle") {
    if (dir == "h") {
      out << print(make_document(hcompose_cubicles(*a.cubicle, *b.cubicle)));
    } else if (dir == "v") {
      out << print(make_document(vcompose_cubicles(*a.cubicle, *b.cubicle)));
    } else {
      throw InputError("cubicle composition needs --dir h or --dir v");
    }
  } else {
    throw InputError("compose expects hcell, vcell or cubicle files");
  }
  return 0;
}

int cmd_dlc_dual(const std::string& which, const std::string& file,
                 std::ostream& out) {
  Document d = parse_validated(file);
  if (d.kind == "zerocell") {
    const ZeroCell& z = *d.zerocell;
    out << print(make_document(which == "sharp"   ? sharp_zero(z)
                               : which == "star" ? star_zero(z)
                                                 : central_dual(z)));
  } else if (d.kind == "hcell") {
    const HorizontalCell& h = *d.hcell;
    out << print(make_document(which == "sharp"   ? sharp_horizontal(h)
                               : which == "star" ? star_horizontal(h)
                                                 : central_dual(h)));
  } else if (d.kind == "vcell") {
    const VerticalCell& v = *d.vcell;
    out << print(make_document(which == "sharp"   ? sharp_vertical(v)
                               : which == "star" ? star_vertical(v)
                                                 : central_dual(v)));
  } else if (d.kind == "cubicle") {
    const Cubicle& c = *d.cubicle;
    out << print(make_document(which == "sharp"   ? sharp_cubicle(c)
                               : which == "star" ? star_cubicle(c)
                                                 : central_dual(c)));
  } else {
    throw InputError(which + " expects a cell file, got " + d.kind);
  }
  return 0;
}

int cmd_dlc_axioms(const std::string& dir, std::ostream& out) {
  DlcFixture fixture;
  for (const fs::path& p :
       sorted_files(dir, {".cell", ".hc", ".vc", ".cub"})) {
    std::string ext = p.extension().string();
    if (ext == ".cell") fixture.cells.push_back(parse_cell_file(p.string()));
    else if (ext == ".hc") {
      Document d = parse_validated(p.string());
      if (d.kind != "hcell") throw InputError(p.string() + " is not an hcell");
      fixture.horizontals.push_back(*d.hcell);
    } else if (ext == ".vc") {
      fixture.verticals.push_back(parse_vcell_file(p.string()));
    } else {
      Document d = parse_validated(p.string());
      if (d.kind != "cubicle")
        throw InputError(p.string() + " is not a cubicle");
      fixture.cubicles.push_back(*d.cubicle);
    }
  }
  out << "cells: " << fixture.cells.size()
      << " horizontals: " << fixture.horizontals.size()
      << " verticals: " << fixture.verticals.size()
      << " cubicles: " << fixture.cubicles.size() << "\n";
  AxiomReport r = check_internal_axioms(fixture);
  out << "identity checks: " << r.identity_checks << "\n";
  out << "boundary checks: " << r.boundary_checks << "\n";
  out << "unit checks: " << r.unit_checks << "\n";
  out << "associativity checks: " << r.associativity_checks << "\n";
  out << "interchange checks: " << r.interchange_checks << "\n";
  for (const std::string& v : r.violations) out << "violation: " << v << "\n";
  out << "result: " << (r.ok() ? "pass" : "fail") << "\n";
  return r.ok() ? 0 : 1;
}

int cmd_dlc_hprod(const std::string& f1, const std::string& f2,
                  const Budget& bud, std::ostream& out) {
  HorizontalProduct hp =
      horizontal_product(parse_vcell_file(f1), parse_vcell_file(f2), bud);
  out << "# top carrier " << hp.w.src.top.carrier.carrier.size()
      << ", bottom carrier " << hp.w.src.bottom.carrier.carrier.size() << "\n";
  out << print(make_document(hp.w));
  return 0;
}

int cmd_dlc_nocone(const std::string& dir, const std::string& fq,
                   const Budget& bud, std::ostream& out) {
  std::vector<fs::path> cells = sorted_files(dir, {".cell"});
  if (cells.size() != 2)
    throw InputError(dir + " must contain exactly two .cell files");
  ZeroCell p1 = parse_cell_file(cells[0].string());
  ZeroCell p2 = parse_cell_file(cells[1].string());
  ZeroCell q = parse_cell_file(fq);
  bool no = check_no_cone(p1, p2, q, bud);
  out << (no ? "no cone" : "cone exists") << "\n";
  return no ? 0 : 1;
}

int cmd_suite(const std::string& name, unsigned seed, const Budget& bud,
              std::ostream& out) {
  const std::vector<std::string>& names = suite_names();
  if (name == "all") {
    bool all = true;
    for (const std::string& n : names) all = run_suite(n, seed, bud, out) && all;
    return all ? 0 : 1;
  }
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw InputError("unknown suite '" + name + "'");
  return run_suite(name, seed, bud, out) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Chu space and double-cell toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  long long budget_flag = -1;
  app.add_option("--budget", budget_flag,
                 "function-table budget (overrides CHU_BUDGET)")
      ->check(CLI::PositiveNumber);

  int rc = 0;
  std::string a1, a2, a3, a4;
  std::vector<std::string> rest;
  unsigned seed = 1;
  auto bud = [&] { return resolve_budget(budget_flag); };

  CLI::App* chu_g = app.add_subcommand("chu", "spaces and transforms");
  chu_g->require_subcommand(1);
  {
    CLI::App* c = chu_g->add_subcommand("validate", "type-check an artifact");
    c->add_option("file", a1)->required();
    c->callback([&] { rc = cmd_validate(a1, out); });
    c = chu_g->add_subcommand("dual", "dualize a space or transform");
    c->add_option("file", a1)->required();
    c->callback([&] { rc = cmd_dual(a1, out); });
    c = chu_g->add_subcommand("collapse", "biextensional collapse of a space");
    c->add_option("file", a1)->required();
    c->callback([&] { rc = cmd_collapse(a1, out); });
    c = chu_g->add_subcommand("homcount", "count transforms between spaces");
    c->add_option("a", a1)->required();
    c->add_option("b", a2)->required();
    c->callback([&] { rc = cmd_homcount(a1, a2, bud(), out); });
    c = chu_g->add_subcommand("check", "decide a predicate");
    c->add_option("predicate", a1)
        ->required()
        ->check(CLI::IsMember({"monic", "epic", "iso", "extensional",
                               "separable", "biextensional", "topological"}));
    c->add_option("file", a2)->required();
    c->callback([&] { rc = cmd_check(a1, a2, out); });
  }

  CLI::App* conn = app.add_subcommand("conn", "linear connectives");
  conn->require_subcommand(1);
  {
    for (const char* op : {"tensor", "par", "with", "plus", "lolli"}) {
      CLI::App* c = conn->add_subcommand(op, "combine two spaces");
      c->add_option("a", a1)->required();
      c->add_option("b", a2)->required();
      c->callback([&, op] { rc = cmd_conn_binary(op, a1, a2, bud(), out); });
    }
    CLI::App* c = conn->add_subcommand("unit", "emit a unit space");
    c->add_option("which", a1)
        ->required()
        ->check(CLI::IsMember({"i", "perp", "zero", "top"}));
    c->add_option("symbols", rest, "alphabet symbols (default 0 1)");
    c->callback([&] { rc = cmd_conn_unit(a1, rest, out); });
    c = conn->add_subcommand("curry", "curry h: A (x) B -> C");
    c->add_option("hom", a1)->required();
    c->add_option("a", a2)->required();
    c->add_option("b", a3)->required();
    c->add_option("c", a4)->required();
    c->callback([&] { rc = cmd_conn_curry(a1, a2, a3, a4, bud(), out); });
    c = conn->add_subcommand("doubledual", "canonical map into the double dual");
    c->add_option("a", a1)->required();
    c->callback([&] { rc = cmd_conn_doubledual(a1, bud(), out); });
    c = conn->add_subcommand("equalizer", "equalizer of a parallel pair");
    c->add_option("f", a1)->required();
    c->add_option("g", a2)->required();
    c->callback([&] { rc = cmd_conn_equalizer(a1, a2, out); });
    c = conn->add_subcommand("pullback", "pullback of a cospan");
    c->add_option("f", a1)->required();
    c->add_option("g", a2)->required();
    c->callback([&] { rc = cmd_conn_pullback(a1, a2, out); });
  }

  CLI::App* fun = app.add_subcommand("functor", "endofunctor engine");
  fun->require_subcommand(1);
  {
    CLI::App* c = fun->add_subcommand("apply", "apply a functor");
    c->add_option("functor", a1)->required();
    c->add_option("arg", a2)->required();
    c->callback([&] { rc = cmd_functor_apply(a1, a2, out); });
    c = fun->add_subcommand("laws", "identity and composition laws");
    c->add_option("functor", a1)->required();
    c->add_option("f", a2)->required();
    c->add_option("g", a3)->required();
    c->callback([&] { rc = cmd_functor_laws(a1, a2, a3, out); });
    c = fun->add_subcommand("uplift-check", "carrier-level agreement");
    c->add_option("functor", a1)->required();
    c->add_option("samples", rest)->required();
    c->callback([&] { rc = cmd_functor_uplift(a1, rest, out); });
    c = fun->add_subcommand("preserves", "limit preservation");
    c->add_option("what", a1)
        ->required()
        ->check(CLI::IsMember({"products", "coproducts", "pullbacks"}));
    c->add_option("functor", a2)->required();
    c->add_option("x", a3)->required();
    c->add_option("y", a4)->required();
    c->callback([&] { rc = cmd_functor_preserves(a1, a2, a3, a4, bud(), out); });
  }

  CLI::App* dia = app.add_subcommand("dialg", "dialgebras");
  dia->require_subcommand(1);
  {
    CLI::App* c = dia->add_subcommand("validate", "type-check an artifact");
    c->add_option("file", a1)->required();
    c->callback([&] { rc = cmd_validate(a1, out); });
    c = dia->add_subcommand("hom", "count homomorphisms");
    c->add_option("d1", a1)->required();
    c->add_option("d2", a2)->required();
    c->callback([&] { rc = cmd_dialg_hom(a1, a2, bud(), out); });
    c = dia->add_subcommand("product", "binary product");
    c->add_option("d1", a1)->required();
    c->add_option("d2", a2)->required();
    c->callback([&] { rc = cmd_dialg_product(false, a1, a2, bud(), out); });
    c = dia->add_subcommand("coproduct", "binary coproduct");
    c->add_option("d1", a1)->required();
    c->add_option("d2", a2)->required();
    c->callback([&] { rc = cmd_dialg_product(true, a1, a2, bud(), out); });
    c = dia->add_subcommand("bisim", "pullback bisimulation of a cospan");
    c->add_option("h1", a1)->required();
    c->add_option("h2", a2)->required();
    c->callback([&] { rc = cmd_dialg_bisim(a1, a2, bud(), out); });
    c = dia->add_subcommand("graph", "hom versus graph bisimulation");
    c->add_option("stem", a1)->required();
    c->add_option("d1", a2)->required();
    c->add_option("d2", a3)->required();
    c->callback([&] { rc = cmd_dialg_graph(a1, a2, a3, bud(), out); });
    c = dia->add_subcommand("tilde", "dualized structure map");
    c->add_option("d", a1)->required();
    c->callback([&] { rc = cmd_dialg_tilde(a1, out); });
  }

  CLI::App* dlc = app.add_subcommand("dlc", "double-cell layer");
  dlc->require_subcommand(1);
  {
    std::string dir;
    CLI::App* c = dlc->add_subcommand("validate", "type-check an artifact");
    c->add_option("file", a1)->required();
    c->callback([&] { rc = cmd_validate(a1, out); });
    c = dlc->add_subcommand("compose", "compose two cells");
    c->add_option("a", a1)->required();
    c->add_option("b", a2)->required();
    c->add_option("--dir", a4, "cubicle direction: h or v")
        ->check(CLI::IsMember({"h", "v"}));
    c->callback([&] { rc = cmd_dlc_compose(a1, a2, a4, out); });
    for (const char* op : {"sharp", "star", "central"}) {
      c = dlc->add_subcommand(op, "dualize a cell");
      c->add_option("file", a1)->required();
      c->callback([&, op] { rc = cmd_dlc_dual(op, a1, out); });
    }
    c = dlc->add_subcommand("axioms", "check category axioms over a directory");
    c->add_option("dir", a1)->required();
    c->callback([&] { rc = cmd_dlc_axioms(a1, out); });
    c = dlc->add_subcommand("hprod", "horizontal product of vertical cells");
    c->add_option("v1", a1)->required();
    c->add_option("v2", a2)->required();
    c->callback([&] { rc = cmd_dlc_hprod(a1, a2, bud(), out); });
    c = dlc->add_subcommand("nocone", "decide cone nonexistence");
    c->add_option("dir", a1)->required();
    c->add_option("apex", a2)->required();
    c->callback([&] { rc = cmd_dlc_nocone(a1, a2, bud(), out); });
  }

  CLI::App* suite = app.add_subcommand("suite", "theorem suites");
  suite->require_subcommand(1);
  {
    CLI::App* c = suite->add_subcommand("run", "run one suite or all");
    c->add_option("name", a1)->required();
    c->add_option("--seed", seed, "random seed (default 1)");
    c->callback([&] { rc = cmd_suite(a1, seed, bud(), out); });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("chu");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.exit_class;
  }
  return rc;
}

}  // namespace chu
