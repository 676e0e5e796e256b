#include "twinrep/groups.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "twinrep/error.hpp"

namespace twinrep::groups {

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::B: return "B";
    case GroupTag::T: return "T";
    case GroupTag::VT: return "VT";
    case GroupTag::WT: return "WT";
  }
  return "?";
}

GroupTag group_tag_from_string(const std::string& s) {
  if (s == "B") return GroupTag::B;
  if (s == "T") return GroupTag::T;
  if (s == "VT") return GroupTag::VT;
  if (s == "WT") return GroupTag::WT;
  throw Error("unknown group tag: " + s);
}

std::string to_string(const Generator& g) {
  char c = g.kind == GenKind::S ? 's' : g.kind == GenKind::Rho ? 'r' : 'g';
  std::string out = c + std::to_string(g.index);
  if (g.exponent == -1) out += "^-1";
  return out;
}

bool involutive(GenKind kind, GroupTag tag) {
  if (tag == GroupTag::B) return false;
  return kind == GenKind::S || kind == GenKind::Rho;
}

GroupWord::GroupWord(std::vector<Generator> gens, GroupTag tag) : tag_(tag) {
  for (Generator g : gens) {
    if (involutive(g.kind, tag)) g.exponent = 1;
    bool cancel = false;
    if (!gens_.empty()) {
      const Generator& last = gens_.back();
      if (last.kind == g.kind && last.index == g.index) {
        if (involutive(g.kind, tag) || last.exponent == -g.exponent) cancel = true;
      }
    }
    if (cancel)
      gens_.pop_back();
    else
      gens_.push_back(g);
  }
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<Generator> all = gens_;
  all.insert(all.end(), o.gens_.begin(), o.gens_.end());
  return GroupWord(std::move(all), tag_);
}

GroupWord GroupWord::inverse() const {
  std::vector<Generator> rev(gens_.rbegin(), gens_.rend());
  for (auto& g : rev)
    if (!involutive(g.kind, tag_)) g.exponent = -g.exponent;
  return GroupWord(std::move(rev), tag_);
}

GroupWord GroupWord::pow(int e) const {
  GroupWord base = e < 0 ? inverse() : *this;
  GroupWord acc({}, tag_);
  for (int i = 0; i < std::abs(e); i++) acc = acc * base;
  return acc;
}

std::string to_string(const GroupWord& w) {
  std::string out;
  for (const auto& g : w.gens()) {
    if (!out.empty()) out += " ";
    out += to_string(g);
  }
  return out;
}

GroupWord parse_word(const std::string& text, GroupTag tag, int n) {
  std::vector<Generator> gens;
  size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw Error("word parse error at offset " + std::to_string(pos) + ": " + msg);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      pos++;
      continue;
    }
    char c = text[pos];
    GenKind kind;
    if (c == 's')
      kind = GenKind::S;
    else if (c == 'r')
      kind = GenKind::Rho;
    else if (c == 'g')
      kind = GenKind::Sigma;
    else
      fail(std::string("expected generator letter s, r or g, got '") + c + "'");
    bool allowed = (tag == GroupTag::B && kind == GenKind::Sigma) ||
                   (tag == GroupTag::T && kind == GenKind::S) ||
                   ((tag == GroupTag::VT || tag == GroupTag::WT) && kind != GenKind::Sigma);
    if (!allowed) fail("generator kind '" + std::string(1, c) + "' not valid in " + to_string(tag) + "_n");
    pos++;
    size_t d0 = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) pos++;
    if (pos == d0) fail("expected generator index");
    int index = std::stoi(text.substr(d0, pos - d0));
    if (index < 1 || index > n - 1)
      fail("index out of range for n=" + std::to_string(n) + ": " + std::to_string(index));
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      pos++;
      bool neg = pos < text.size() && text[pos] == '-';
      if (neg) pos++;
      size_t e0 = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) pos++;
      if (pos == e0 || text.substr(e0, pos - e0) != "1") fail("exponent must be 1 or -1");
      exponent = neg ? -1 : 1;
    }
    gens.push_back(Generator{kind, index, exponent});
  }
  return GroupWord(std::move(gens), tag);
}

namespace {

Generator S(int i) { return Generator{GenKind::S, i, 1}; }
Generator R(int i) { return Generator{GenKind::Rho, i, 1}; }
Generator G(int i) { return Generator{GenKind::Sigma, i, 1}; }

std::string relation_name(const std::vector<Generator>& lhs, const std::vector<Generator>& rhs) {
  auto side = [](const std::vector<Generator>& w) {
    if (w.empty()) return std::string("1");
    std::string out;
    for (const auto& g : w) {
      if (!out.empty()) out += " ";
      out += to_string(g);
    }
    return out;
  };
  return side(lhs) + " = " + side(rhs);
}

void add_relation(Presentation& p, std::vector<Generator> lhs, std::vector<Generator> rhs) {
  Relation rel{std::move(lhs), std::move(rhs), ""};
  rel.name = relation_name(rel.lhs, rel.rhs);
  p.relations.push_back(std::move(rel));
}

}  // namespace

Presentation presentation(GroupTag tag, int n) {
  if (n < 2) throw Error("presentation requires n >= 2");
  Presentation p{tag, n, {}, {}};
  if (tag == GroupTag::B) {
    for (int i = 1; i <= n - 1; i++) p.generators.push_back(G(i));
    for (int i = 1; i <= n - 2; i++)
      add_relation(p, {G(i), G(i + 1), G(i)}, {G(i + 1), G(i), G(i + 1)});
    for (int i = 1; i <= n - 1; i++)
      for (int j = i + 2; j <= n - 1; j++) add_relation(p, {G(i), G(j)}, {G(j), G(i)});
    return p;
  }
  for (int i = 1; i <= n - 1; i++) p.generators.push_back(S(i));
  for (int i = 1; i <= n - 1; i++) add_relation(p, {S(i), S(i)}, {});
  for (int i = 1; i <= n - 1; i++)
    for (int j = i + 2; j <= n - 1; j++) add_relation(p, {S(i), S(j)}, {S(j), S(i)});
  if (tag == GroupTag::T) return p;

  for (int i = 1; i <= n - 1; i++) p.generators.push_back(R(i));
  for (int i = 1; i <= n - 2; i++)
    add_relation(p, {R(i), R(i + 1), R(i)}, {R(i + 1), R(i), R(i + 1)});
  for (int i = 1; i <= n - 1; i++)
    for (int j = i + 2; j <= n - 1; j++) add_relation(p, {R(i), R(j)}, {R(j), R(i)});
  for (int i = 1; i <= n - 1; i++) add_relation(p, {R(i), R(i)}, {});
  for (int i = 1; i <= n - 1; i++)
    for (int j = 1; j <= n - 1; j++)
      if (std::abs(i - j) >= 2) add_relation(p, {S(i), R(j)}, {R(j), S(i)});
  for (int i = 1; i <= n - 2; i++)
    add_relation(p, {R(i), R(i + 1), S(i)}, {S(i + 1), R(i), R(i + 1)});
  if (tag == GroupTag::VT) return p;

  for (int i = 1; i <= n - 2; i++)
    add_relation(p, {R(i), S(i + 1), S(i)}, {S(i + 1), S(i), R(i + 1)});
  return p;
}

// ---------------------------------------------------------------- evaluation

void ImageMap::set(GenKind kind, int index, la::Matrix image) {
  if (dim_ == 0) dim_ = image.dim();
  if (image.dim() != dim_) throw Error("generator image dimension mismatch");
  images_[{static_cast<int>(kind), index}] = std::move(image);
}

bool ImageMap::has(GenKind kind, int index) const {
  return images_.count({static_cast<int>(kind), index}) > 0;
}

const la::Matrix& ImageMap::image(GenKind kind, int index) const {
  auto it = images_.find({static_cast<int>(kind), index});
  if (it == images_.end())
    throw Error("missing image for generator " + to_string(Generator{kind, index, 1}));
  return it->second;
}

const la::Matrix& ImageMap::inverse_image(GenKind kind, int index) const {
  auto key = std::make_pair(static_cast<int>(kind), index);
  auto it = inverses_.find(key);
  if (it == inverses_.end()) it = inverses_.emplace(key, la::inverse(image(kind, index))).first;
  return it->second;
}

la::Matrix eval_hom(std::span<const Generator> word, const ImageMap& images) {
  if (images.dim() == 0) throw Error("empty image map");
  la::Matrix acc = la::Matrix::identity(images.dim());
  for (const auto& g : word) {
    const la::Matrix& m =
        g.exponent == -1 ? images.inverse_image(g.kind, g.index) : images.image(g.kind, g.index);
    acc = acc * m;
  }
  return acc;
}

la::Matrix eval_hom(const GroupWord& word, const ImageMap& images) {
  return eval_hom(std::span<const Generator>(word.gens()), images);
}

// ---------------------------------------------------------------- quotients

bool is_identity_perm(const Perm& p) {
  for (size_t i = 0; i < p.size(); i++)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::string to_string(const Perm& p) {
  // cycle notation on 1..n
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (size_t i = 0; i < p.size(); i++) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

namespace {
Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; i++) p[i] = i;
  return p;
}
Perm perm_mul(const Perm& a, const Perm& b) {  // (a ∘ b)(x) = a(b(x))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[b[i]];
  return r;
}
}  // namespace

SymQuotient::SymQuotient(const Presentation& pres, SymMode mode) : n_(pres.n), mode_(mode) {
  for (const auto& rel : pres.relations) {
    Perm l = image(std::span<const Generator>(rel.lhs));
    Perm r = image(std::span<const Generator>(rel.rhs));
    if (l != r)
      throw Error("quotient mode is not a homomorphism for " + to_string(pres.tag) +
                  "_n: relation " + rel.name + " fails in the symmetric group");
  }
}

Perm SymQuotient::image(std::span<const Generator> w) const {
  Perm acc = perm_identity(n_);
  for (const auto& g : w) {
    if (mode_ == SymMode::RhoOnly && g.kind != GenKind::Rho) continue;
    Perm t = perm_identity(n_);
    std::swap(t[g.index - 1], t[g.index]);
    acc = perm_mul(acc, t);
  }
  return acc;
}

Perm SymQuotient::image(const GroupWord& w) const {
  return image(std::span<const Generator>(w.gens()));
}

Perm sym_image(const GroupWord& word, SymMode mode, const Presentation& pres) {
  return SymQuotient(pres, mode).image(word);
}

AbelianQuotient::AbelianQuotient(const Presentation& pres) : pres_(pres) {
  size_t g = pres.generators.size();
  auto col_of = [&](const Generator& gen) -> size_t {
    for (size_t c = 0; c < g; c++)
      if (pres.generators[c].kind == gen.kind && pres.generators[c].index == gen.index) return c;
    throw Error("relation uses unknown generator");
  };
  IntMat rel(pres.relations.size(), std::vector<long long>(g, 0));
  for (size_t r = 0; r < pres.relations.size(); r++) {
    for (const auto& gen : pres.relations[r].lhs) rel[r][col_of(gen)] += gen.exponent;
    for (const auto& gen : pres.relations[r].rhs) rel[r][col_of(gen)] -= gen.exponent;
  }
  SnfResult snf = smith_normal_form(rel);
  v_inv_ = snf.v_inv;
  factors_.assign(g, 0);
  for (size_t i = 0; i < std::min(rel.size(), g); i++) factors_[i] = snf.s[i][i];
}

std::vector<long long> AbelianQuotient::exponent_vector(const GroupWord& w) const {
  std::vector<long long> e(pres_.generators.size(), 0);
  for (const auto& gen : w.gens()) {
    for (size_t c = 0; c < pres_.generators.size(); c++)
      if (pres_.generators[c].kind == gen.kind && pres_.generators[c].index == gen.index) {
        e[c] += gen.exponent;
        break;
      }
  }
  return e;
}

std::vector<long long> AbelianQuotient::image(const GroupWord& w) const {
  std::vector<long long> e = exponent_vector(w);
  size_t g = e.size();
  std::vector<long long> c(g, 0);
  for (size_t j = 0; j < g; j++)
    for (size_t i = 0; i < g; i++) c[j] += e[i] * v_inv_[i][j];
  for (size_t j = 0; j < g; j++) {
    if (factors_[j] > 0) {
      c[j] %= factors_[j];
      if (c[j] < 0) c[j] += factors_[j];
    }
  }
  return c;
}

bool AbelianQuotient::is_trivial_image(const GroupWord& w) const {
  for (long long x : image(w))
    if (x != 0) return false;
  return true;
}

std::vector<long long> AbelianQuotient::reduced_image(const GroupWord& w) const {
  auto full = image(w);
  std::vector<long long> out;
  for (size_t j = 0; j < full.size(); j++)
    if (factors_[j] != 1) out.push_back(full[j]);
  return out;
}

std::string AbelianQuotient::structure() const {
  std::ostringstream out;
  bool any = false;
  for (long long f : factors_) {
    if (f == 1) continue;
    if (any) out << " x ";
    if (f == 0)
      out << "Z";
    else
      out << "Z/" << f;
    any = true;
  }
  return any ? out.str() : "trivial";
}

}  // namespace twinrep::groups
