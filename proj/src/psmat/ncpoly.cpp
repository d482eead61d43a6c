#include "ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace psmat {

GenTable make_gens(const std::vector<std::string>& names, const std::vector<int>& weights) {
  if (names.empty() || names.size() > 64) throw std::invalid_argument("generator count must be 1..64");
  GenTable g;
  g.names = names;
  g.weights = weights.empty() ? std::vector<int>(names.size(), 1) : weights;
  if (g.weights.size() != g.names.size())
    throw std::invalid_argument("weights length mismatch");
  for (const auto& n : g.names) {
    if (n.empty()) throw std::invalid_argument("empty generator name");
    for (char ch : n)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw std::invalid_argument("generator names must be alphanumeric: " + n);
  }
  for (std::size_t i = 0; i < g.names.size(); ++i) {
    if (g.weights[i] < 1) throw std::invalid_argument("generator weights must be >= 1");
    for (std::size_t j = i + 1; j < g.names.size(); ++j)
      if (g.names[i] == g.names[j]) throw std::invalid_argument("duplicate generator name: " + g.names[i]);
  }
  return g;
}

GenTable default_gens() { return make_gens({"a", "b", "c", "u", "v", "t"}); }

const Word& NCPoly::lead_word() const {
  if (t.empty()) throw std::domain_error("lead of zero polynomial");
  return t.front().first;
}

const Rat& NCPoly::lead_coeff() const {
  if (t.empty()) throw std::domain_error("lead of zero polynomial");
  return t.front().second;
}

NCContext::NCContext(GenTable g) : g_(std::move(g)) {
  if (g_.names.empty()) throw std::invalid_argument("empty generator table");
}

int NCContext::gen_index(const std::string& name) const {
  for (std::size_t i = 0; i < g_.names.size(); ++i)
    if (g_.names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator: " + name);
}

int NCContext::wdeg(const Word& w) const {
  int d = 0;
  for (unsigned char ch : w) {
    if (ch >= g_.names.size()) throw std::invalid_argument("word letter out of range");
    d += g_.weights[ch];
  }
  return d;
}

int NCContext::word_cmp(const Word& x, const Word& y) const {
  int dx = wdeg(x), dy = wdeg(y);
  if (dx != dy) return dx < dy ? -1 : 1;
  // same weighted degree: letter-by-letter in generator order; a proper
  // prefix precedes any extension (possible only with unequal weights)
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    unsigned char cx = static_cast<unsigned char>(x[i]), cy = static_cast<unsigned char>(y[i]);
    if (cx != cy) return cx < cy ? -1 : 1;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

NCPoly NCContext::make(std::vector<std::pair<Word, Rat>> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const auto& p, const auto& q) { return word_cmp(p.first, q.first) > 0; });
  NCPoly out;
  for (auto& [w, c] : terms) {
    if (rat_is_zero(c)) continue;
    if (!out.t.empty() && out.t.back().first == w)
      out.t.back().second += c;
    else
      out.t.emplace_back(std::move(w), std::move(c));
  }
  std::erase_if(out.t, [](const auto& p) { return rat_is_zero(p.second); });
  return out;
}

NCPoly NCContext::add(const NCPoly& p, const NCPoly& q) const {
  NCPoly out;
  out.t.reserve(p.t.size() + q.t.size());
  std::size_t i = 0, j = 0;
  while (i < p.t.size() && j < q.t.size()) {
    int c = word_cmp(p.t[i].first, q.t[j].first);
    if (c > 0)
      out.t.push_back(p.t[i++]);
    else if (c < 0)
      out.t.push_back(q.t[j++]);
    else {
      Rat s = p.t[i].second + q.t[j].second;
      if (!rat_is_zero(s)) out.t.emplace_back(p.t[i].first, std::move(s));
      ++i, ++j;
    }
  }
  for (; i < p.t.size(); ++i) out.t.push_back(p.t[i]);
  for (; j < q.t.size(); ++j) out.t.push_back(q.t[j]);
  return out;
}

NCPoly NCContext::scale(const NCPoly& p, const Rat& s) const {
  if (rat_is_zero(s)) return {};
  NCPoly out = p;
  for (auto& [w, c] : out.t) c *= s;
  return out;
}

NCPoly NCContext::sub(const NCPoly& p, const NCPoly& q) const { return add(p, scale(q, Rat(-1))); }

NCPoly NCContext::mul_word(const Word& left, const NCPoly& p, const Word& right) const {
  // one-sided monomial multiples preserve the order, so term order survives
  NCPoly out = p;
  for (auto& [w, c] : out.t) w = left + w + right;
  return out;
}

NCPoly NCContext::mul(const NCPoly& p, const NCPoly& q) const {
  std::vector<std::pair<Word, Rat>> terms;
  terms.reserve(p.t.size() * q.t.size());
  for (const auto& [wp, cp] : p.t)
    for (const auto& [wq, cq] : q.t) terms.emplace_back(wp + wq, cp * cq);
  return make(std::move(terms));
}

NCPoly NCContext::monic(const NCPoly& p) const {
  if (p.zero()) return p;
  return scale(p, Rat(1) / p.lead_coeff());
}

bool NCContext::homogeneous(const NCPoly& p, int* deg) const {
  if (p.zero()) {
    if (deg) *deg = -1;
    return true;
  }
  int d = wdeg(p.t.front().first);
  for (const auto& [w, c] : p.t)
    if (wdeg(w) != d) return false;
  if (deg) *deg = d;
  return true;
}

int NCContext::degree(const NCPoly& p) const { return p.zero() ? -1 : wdeg(p.lead_word()); }

Word NCContext::word_of(const std::string& letters) const {
  Word w;
  w.reserve(letters.size());
  for (char ch : letters) w.push_back(static_cast<char>(gen_index(std::string(1, ch))));
  return w;
}

std::string NCContext::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += g_.names[static_cast<unsigned char>(w[i])];
  }
  return out;
}

std::string NCContext::str(const NCPoly& p) const {
  if (p.zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.t) {
    bool neg = sgn(c) < 0;
    Rat ac = rat_abs(c);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (w.empty()) {
      out += rat_str(ac);
    } else if (ac == 1) {
      out += word_str(w);
    } else {
      out += rat_str(ac) + "*" + word_str(w);
    }
  }
  return out;
}

NCPoly NCContext::parse(const std::string& text) const {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<std::pair<Word, Rat>> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string chunk = s.substr(i, j - i);
    if (chunk.empty()) throw std::invalid_argument("dangling sign in polynomial text: " + text);
    Rat coeff(sign);
    std::string wordpart = chunk;
    auto star = chunk.find('*');
    if (star != std::string::npos) {
      coeff = Rat(sign) * rat_parse(chunk.substr(0, star));
      wordpart = chunk.substr(star + 1);
      if (wordpart.empty()) throw std::invalid_argument("missing word after '*': " + chunk);
    } else if (!chunk.empty() && (std::isdigit(static_cast<unsigned char>(chunk[0])))) {
      coeff = Rat(sign) * rat_parse(chunk);
      wordpart.clear();
    }
    Word w;
    if (!wordpart.empty() && wordpart != "1") {
      std::size_t start = 0;
      while (start <= wordpart.size()) {
        auto dot = wordpart.find('.', start);
        std::string name = wordpart.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (name.empty()) throw std::invalid_argument("empty generator name in word: " + chunk);
        w.push_back(static_cast<char>(gen_index(name)));
        if (dot == std::string::npos) break;
        start = dot + 1;
      }
    }
    terms.emplace_back(std::move(w), std::move(coeff));
    i = j;
  }
  return make(std::move(terms));
}

// ---------- reduction ----------

namespace {

struct Site {
  std::size_t term = 0;
  std::size_t pos = 0;
  std::size_t basis = 0;
  bool found = false;
};

Site find_site(const NCPoly& p, const std::vector<NCPoly>& basis) {
  // terms are sorted descending, so the first reducible term is the largest
  for (std::size_t ti = 0; ti < p.t.size(); ++ti) {
    const Word& w = p.t[ti].first;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        const Word& lw = basis[bi].lead_word();
        if (lw.empty() || lw.size() > w.size() - pos) continue;
        if (w.compare(pos, lw.size(), lw) == 0) return {ti, pos, bi, true};
      }
  }
  return {};
}

}  // namespace

NCPoly normal_form(const NCContext& ctx, const NCPoly& p, const std::vector<NCPoly>& basis,
                   std::vector<CofactorStep>* cofactors) {
  for (const auto& g : basis)
    if (g.zero()) throw std::invalid_argument("zero polynomial in basis");
  NCPoly r = p;
  while (true) {
    Site s = find_site(r, basis);
    if (!s.found) return r;
    const Word& w = r.t[s.term].first;
    const NCPoly& g = basis[s.basis];
    Rat factor = r.t[s.term].second / g.lead_coeff();
    Word left = w.substr(0, s.pos);
    Word right = w.substr(s.pos + g.lead_word().size());
    if (cofactors)
      cofactors->push_back({factor, left, static_cast<int>(s.basis), right});
    r = ctx.sub(r, ctx.scale(ctx.mul_word(left, g, right), factor));
  }
}

// ---------- truncated completion ----------

namespace {

struct QueueItem {
  int deg;
  long seq;
  NCPoly poly;
};

struct QueueCmp {
  bool operator()(const QueueItem& a, const QueueItem& b) const {
    return std::tie(a.deg, a.seq) > std::tie(b.deg, b.seq);
  }
};

}  // namespace

GBResult truncated_buchberger(const NCContext& ctx, const std::vector<NCPoly>& gens,
                              int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
  std::priority_queue<QueueItem, std::vector<QueueItem>, QueueCmp> queue;
  long seq = 0;
  for (const auto& g : gens) {
    if (g.zero()) throw std::invalid_argument("zero generator");
    int d = 0;
    if (!ctx.homogeneous(g, &d))
      throw std::invalid_argument("inhomogeneous generator: " + ctx.str(g));
    if (d == 0) throw std::invalid_argument("constant generator: " + ctx.str(g));
    if (d > degree_bound)
      throw std::invalid_argument("generator degree exceeds bound: " + ctx.str(g));
    queue.push({d, seq++, g});
  }
  std::vector<NCPoly> basis;
  auto push_composition = [&](const NCPoly& comp) {
    if (comp.zero()) return;
    int d = ctx.degree(comp);
    if (d <= degree_bound) queue.push({d, seq++, comp});
  };
  auto compositions = [&](const NCPoly& f, const NCPoly& g) {
    const Word& wf = f.lead_word();
    const Word& wg = g.lead_word();
    // suffix of wf meets prefix of wg in a proper overlap
    std::size_t maxk = std::min(wf.size(), wg.size()) - 1;
    for (std::size_t k = 1; k <= maxk; ++k) {
      if (wf.compare(wf.size() - k, k, wg, 0, k) != 0) continue;
      if (ctx.wdeg(wf) + ctx.wdeg(wg.substr(k)) > degree_bound) continue;
      NCPoly left = ctx.mul_word("", f, wg.substr(k));
      NCPoly right = ctx.mul_word(wf.substr(0, wf.size() - k), g, "");
      push_composition(ctx.sub(ctx.monic(left), ctx.monic(right)));
    }
    // wg as a proper factor inside wf
    if (wg.size() < wf.size()) {
      for (std::size_t pos = 0; pos + wg.size() <= wf.size(); ++pos) {
        if (wf.compare(pos, wg.size(), wg) != 0) continue;
        NCPoly emb = ctx.mul_word(wf.substr(0, pos), g, wf.substr(pos + wg.size()));
        push_composition(ctx.sub(ctx.monic(f), ctx.monic(emb)));
      }
    }
  };
  while (!queue.empty()) {
    NCPoly p = queue.top().poly;
    queue.pop();
    NCPoly h = normal_form(ctx, p, basis);
    if (h.zero()) continue;
    h = ctx.monic(h);
    basis.push_back(h);
    const NCPoly& added = basis.back();
    for (const auto& g : basis) {
      compositions(added, g);
      if (&g != &added) compositions(g, added);
    }
  }
  // tail inter-reduction: lead terms are pairwise irreducible already
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<NCPoly> others;
    others.reserve(basis.size() - 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    basis[i] = ctx.monic(normal_form(ctx, basis[i], others));
  }
  std::sort(basis.begin(), basis.end(), [&ctx](const NCPoly& x, const NCPoly& y) {
    int dx = ctx.degree(x), dy = ctx.degree(y);
    if (dx != dy) return dx < dy;
    return ctx.word_cmp(x.lead_word(), y.lead_word()) < 0;
  });
  GBResult out;
  out.degree_bound = degree_bound;
  out.complete_below_bound = true;
  for (const auto& g : basis) out.count_by_degree[ctx.degree(g)]++;
  out.basis = std::move(basis);
  return out;
}

std::vector<MembershipLine> membership_report(
    const NCContext& ctx, const GBResult& gb,
    const std::vector<std::pair<std::string, NCPoly>>& targets) {
  std::vector<MembershipLine> out;
  out.reserve(targets.size());
  for (const auto& [name, target] : targets) {
    MembershipLine line;
    line.name = name;
    line.target = target;
    line.residual = normal_form(ctx, target, gb.basis);
    line.in_ideal = line.residual.zero();
    out.push_back(std::move(line));
  }
  return out;
}

// ---------- presets ----------

namespace {

NCPoly commutator(const NCContext& ctx, const std::string& x, const std::string& y) {
  return ctx.sub(ctx.parse(x + "." + y), ctx.parse(y + "." + x));
}

}  // namespace

std::vector<std::string> preset_names() { return {"s4", "s2", "s3", "s21", "remark121"}; }

PresetSystem preset_system(const std::string& name) {
  if (name == "s4") {
    NCContext ctx(make_gens({"a", "b", "c"}));
    std::vector<NCPoly> gens = {
        ctx.parse("a + b + c"),
        ctx.parse("a.a + b.b + c.c"),
        ctx.parse("a.a.a + b.b.b + c.c.c"),
    };
    return {name, std::move(ctx), std::move(gens)};
  }
  if (name == "s2") {
    NCContext ctx(make_gens({"a", "b", "c", "u"}));
    std::vector<NCPoly> gens = {
        ctx.parse("a + b + c"),
        ctx.parse("a.a + b.b + c.c - u.u"),
        ctx.parse("a.a.a + b.b.b + c.c.c"),
        commutator(ctx, "a", "u"),
        commutator(ctx, "b", "u"),
        commutator(ctx, "c", "u"),
    };
    return {name, std::move(ctx), std::move(gens)};
  }
  if (name == "s3") {
    NCContext ctx(make_gens({"a", "b", "c", "u"}));
    std::vector<NCPoly> gens = {
        ctx.parse("a + b + c"),
        ctx.parse("a.a + b.b + c.c - 2*u.u"),
        ctx.parse("a.a.a - a.u.u"),
        ctx.parse("b.b.b - b.u.u"),
        ctx.parse("c.c.c - c.u.u"),
        commutator(ctx, "a", "u"),
        commutator(ctx, "b", "u"),
        commutator(ctx, "c", "u"),
    };
    return {name, std::move(ctx), std::move(gens)};
  }
  if (name == "s21") {
    NCContext ctx(make_gens({"a", "b", "c", "u", "v"}));
    std::vector<NCPoly> gens = {
        ctx.parse("a + b + c"),
        ctx.parse("a.a + b.b + c.c - u.u"),
        ctx.parse("a.a.a + b.b.b + c.c.c - v.v.v"),
    };
    for (const char* x : {"a", "b", "c"})
      gens.push_back(ctx.sub(ctx.parse(std::string(x) + ".u.u"), ctx.parse("u.u." + std::string(x))));
    for (const char* x : {"a", "b", "c"})
      gens.push_back(ctx.sub(ctx.parse(std::string(x) + ".v.v.v"), ctx.parse("v.v.v." + std::string(x))));
    gens.push_back(ctx.sub(ctx.parse("u.u.v.v.v"), ctx.parse("v.v.v.u.u")));
    return {name, std::move(ctx), std::move(gens)};
  }
  if (name == "remark121") {
    NCContext ctx(make_gens({"a", "b", "c", "t"}));
    std::vector<NCPoly> gens = {
        ctx.sub(ctx.parse("a.b"), ctx.parse("c.t")),
        ctx.sub(ctx.parse("b.c"), ctx.parse("a.t")),
        ctx.sub(ctx.parse("c.a"), ctx.parse("b.t")),
        commutator(ctx, "a", "t"),
        commutator(ctx, "b", "t"),
        commutator(ctx, "c", "t"),
    };
    return {name, std::move(ctx), std::move(gens)};
  }
  throw std::invalid_argument("unknown preset system: " + name +
                              " (expected s4, s2, s3, s21, or remark121)");
}

}  // namespace psmat
