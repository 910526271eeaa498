#include "freealg.hpp"

#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "parallel.hpp"

namespace biham {

Tree Tree::leaf(int label) {
  if (label < 1) throw std::invalid_argument("Tree: leaf labels are positive");
  auto n = std::make_shared<Node>();
  n->value = label;
  n->min_label = label;
  n->nleaves = 1;
  n->ntype1 = 0;
  return Tree(std::move(n));
}

Tree Tree::bracket(int type, const Tree& left, const Tree& right) {
  if (type != 1 && type != 2) throw std::invalid_argument("Tree: bracket type is 1 or 2");
  auto n = std::make_shared<Node>();
  n->value = type;
  n->l = left.n_;
  n->r = right.n_;
  n->min_label = std::min(left.min_label(), right.min_label());
  n->nleaves = left.leaf_count() + right.leaf_count();
  n->ntype1 = left.type1_count() + right.type1_count() + (type == 1 ? 1 : 0);
  return Tree(std::move(n));
}

namespace {

void encode_into(const Tree& t, std::string& out, bool names) {
  if (t.is_leaf()) {
    if (names) out += 'a';
    out += std::to_string(t.label());
    return;
  }
  out += '{';
  encode_into(t.left(), out, names);
  out += ',';
  encode_into(t.right(), out, names);
  out += '}';
  if (names) out += '_';
  out += std::to_string(t.type());
}

}  // namespace

std::string Tree::encode() const {
  std::string out;
  encode_into(*this, out, false);
  return out;
}

std::string Tree::render() const {
  std::string out;
  encode_into(*this, out, true);
  return out;
}

bool Tree::is_canonical() const {
  if (is_leaf()) return true;
  return left().min_label() < right().min_label() && left().is_canonical() &&
         right().is_canonical();
}

SignedTree canonicalize(const Tree& t) {
  if (t.is_leaf()) return {t, 1};
  SignedTree l = canonicalize(t.left());
  SignedTree r = canonicalize(t.right());
  int sign = l.sign * r.sign;
  if (l.tree.min_label() > r.tree.min_label()) {
    std::swap(l, r);
    sign = -sign;  // skew-symmetry of both brackets
  }
  return {Tree::bracket(t.type(), l.tree, r.tree), sign};
}

Tree relabel(const Tree& t, const std::vector<int>& sigma) {
  if (t.is_leaf()) {
    const int lbl = t.label();
    if (lbl < 1 || lbl > static_cast<int>(sigma.size()))
      throw std::invalid_argument("relabel: label outside the permutation domain");
    return Tree::leaf(sigma[static_cast<std::size_t>(lbl - 1)]);
  }
  return Tree::bracket(t.type(), relabel(t.left(), sigma), relabel(t.right(), sigma));
}

namespace {

using MaskMemo = std::unordered_map<unsigned, std::vector<Tree>>;

const std::vector<Tree>& trees_on_mask(unsigned mask, MaskMemo& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::vector<Tree> out;
  if (std::popcount(mask) == 1) {
    out.push_back(Tree::leaf(std::countr_zero(mask) + 1));
  } else {
    const unsigned low = mask & (~mask + 1u);
    // Left leaf sets are the submasks containing the lowest label, so every
    // produced bracket is already canonically oriented.
    for (unsigned rest = (mask ^ low); rest != 0;) {
      // Iterate proper submasks of mask that contain `low`.
      const unsigned sub = rest;
      rest = (rest - 1) & (mask ^ low);
      const unsigned left_mask = mask ^ sub;  // contains low, proper
      const unsigned right_mask = sub;
      for (const Tree& l : trees_on_mask(left_mask, memo))
        for (const Tree& r : trees_on_mask(right_mask, memo))
          for (int type : {1, 2}) out.push_back(Tree::bracket(type, l, r));
    }
  }
  return memo.emplace(mask, std::move(out)).first->second;
}

}  // namespace

std::vector<Tree> enumerate_monomials(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_monomials: n must be >= 1");
  if (n > kFreeAlgMaxArity)
    throw std::invalid_argument("enumerate_monomials: arity above the oracle limit " +
                                std::to_string(kFreeAlgMaxArity));
  MaskMemo memo;
  return trees_on_mask((1u << n) - 1u, memo);
}

namespace {

struct Pattern {
  Tree x, y, z;
  std::function<Tree(const Tree&)> rebuild;
};

// Every embedded {X,{Y,Z}_i}_j: parent node with an internal child. The other
// child is X regardless of side (one flip only scales the instance).
void collect_patterns(const Tree& t, const std::function<Tree(const Tree&)>& rebuild,
                      std::vector<Pattern>& out) {
  if (t.is_leaf()) return;
  const Tree l = t.left();
  const Tree r = t.right();
  const int jt = t.type();
  if (!r.is_leaf())
    out.push_back({l, r.left(), r.right(), rebuild});
  if (!l.is_leaf())
    out.push_back({r, l.left(), l.right(), rebuild});
  collect_patterns(l,
                   [rebuild, r, jt](const Tree& sub) {
                     return rebuild(Tree::bracket(jt, sub, r));
                   },
                   out);
  collect_patterns(r,
                   [rebuild, l, jt](const Tree& sub) {
                     return rebuild(Tree::bracket(jt, l, sub));
                   },
                   out);
}

void add_term(std::map<std::string, Rational>& acc, const Tree& ambient, int sign) {
  SignedTree c = canonicalize(ambient);
  Rational coeff(sign * c.sign);
  auto [it, inserted] = acc.emplace(c.tree.encode(), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// {A,{B,C}_inner}_outer substituted at the pattern position.
Tree plug(const Pattern& p, int outer, const Tree& a, const Tree& b, const Tree& c,
          int inner) {
  return p.rebuild(Tree::bracket(outer, a, Tree::bracket(inner, b, c)));
}

std::string dedupe_key(const std::map<std::string, Rational>& acc) {
  const Rational& lead = acc.begin()->second;
  std::string key;
  for (const auto& [enc, coeff] : acc) {
    key += enc;
    key += '=';
    key += (coeff / lead).str();
    key += ';';
  }
  return key;
}

}  // namespace

std::vector<RelationInstance> relation_vectors(int n) {
  if (n < 3) throw std::invalid_argument("relation_vectors: n must be >= 3");
  std::vector<RelationInstance> out;
  std::unordered_set<std::string> seen;
  for (const Tree& m : enumerate_monomials(n)) {
    std::vector<Pattern> patterns;
    collect_patterns(m, [](const Tree& t) { return t; }, patterns);
    for (const Pattern& p : patterns) {
      const Tree &x = p.x, &y = p.y, &z = p.z;
      // Jacobi in each bracket type, and the mixed six-term relation.
      std::vector<std::map<std::string, Rational>> instances(3);
      for (int type : {1, 2}) {
        auto& acc = instances[static_cast<std::size_t>(type - 1)];
        add_term(acc, plug(p, type, x, y, z, type), 1);
        add_term(acc, plug(p, type, y, z, x, type), 1);
        add_term(acc, plug(p, type, z, x, y, type), 1);
      }
      auto& six = instances[2];
      for (int inner : {1, 2}) {
        const int outer = 3 - inner;
        add_term(six, plug(p, outer, x, y, z, inner), 1);
        add_term(six, plug(p, outer, y, z, x, inner), 1);
        add_term(six, plug(p, outer, z, x, y, inner), 1);
      }
      for (auto& acc : instances) {
        if (acc.empty()) continue;
        if (!seen.insert(dedupe_key(acc)).second) continue;
        RelationInstance inst;
        inst.terms.assign(acc.begin(), acc.end());
        out.push_back(std::move(inst));
      }
    }
  }
  // Bihomogeneity: every instance lives in a single bidegree.
  MaskMemo memo;
  std::unordered_map<std::string, int> t1_of;
  for (const Tree& m : enumerate_monomials(n)) t1_of.emplace(m.encode(), m.type1_count());
  for (auto& inst : out) {
    for (const auto& [enc, coeff] : inst.terms) {
      auto it = t1_of.find(enc);
      if (it == t1_of.end())
        throw std::logic_error("relation_vectors: term is not a canonical monomial");
      if (inst.bidegree_t1 < 0)
        inst.bidegree_t1 = it->second;
      else if (inst.bidegree_t1 != it->second)
        throw std::logic_error("relation_vectors: instance is not bihomogeneous");
    }
  }
  return out;
}

void QuotientModel::index_monomials(int n) {
  n_ = n;
  monomials_ = enumerate_monomials(n);
  index_.reserve(monomials_.size() * 2);
  col_block_.resize(monomials_.size());
  col_local_.resize(monomials_.size());
  const int nblocks = std::max(1, n);  // t1 in 0..n-1
  blocks_.clear();
  blocks_.resize(static_cast<std::size_t>(nblocks));
  for (int t1 = 0; t1 < nblocks; ++t1) blocks_[static_cast<std::size_t>(t1)].t1 = t1;
  for (std::size_t g = 0; g < monomials_.size(); ++g) {
    index_.emplace(monomials_[g].encode(), static_cast<int>(g));
    const int t1 = monomials_[g].type1_count();
    auto& block = blocks_[static_cast<std::size_t>(t1)];
    col_block_[g] = t1;
    col_local_[g] = static_cast<int>(block.cols.size());
    block.cols.push_back(static_cast<int>(g));
  }
  for (auto& block : blocks_)
    block.ech = std::make_unique<Echelonizer>(static_cast<int>(block.cols.size()));
}

QuotientModel QuotientModel::build(int n, int jobs) {
  QuotientModel model;
  model.index_monomials(n);
  if (n >= 3) {
    std::vector<std::vector<SparseRow>> block_rows(model.blocks_.size());
    for (const auto& inst : relation_vectors(n)) {
      SparseRow row;
      row.reserve(inst.terms.size());
      for (const auto& [enc, coeff] : inst.terms) {
        const int g = model.global_index(enc);
        row.emplace_back(model.col_local_[static_cast<std::size_t>(g)], coeff);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      block_rows[static_cast<std::size_t>(inst.bidegree_t1)].push_back(std::move(row));
    }
    parallel_for(static_cast<int>(model.blocks_.size()), jobs, [&](int b) {
      auto& block = model.blocks_[static_cast<std::size_t>(b)];
      for (auto& row : block_rows[static_cast<std::size_t>(b)])
        block.ech->add_row(std::move(row));
    });
  }
  return model;
}

long long QuotientModel::dimension() const {
  long long dim = 0;
  for (int t1 = 0; t1 < static_cast<int>(blocks_.size()); ++t1)
    dim += block_dimension(t1);
  return dim;
}

long long QuotientModel::block_dimension(int t1) const {
  const auto& block = blocks_.at(static_cast<std::size_t>(t1));
  return static_cast<long long>(block.cols.size()) - block.ech->rank();
}

int QuotientModel::global_index(const std::string& encoded) const {
  auto it = index_.find(encoded);
  if (it == index_.end())
    throw std::invalid_argument("QuotientModel: unknown monomial " + encoded);
  return it->second;
}

SparseRow QuotientModel::reduce_monomial(const Tree& t, const Rational& coeff) const {
  SignedTree c = canonicalize(t);
  const int g = global_index(c.tree.encode());
  const int b = col_block_[static_cast<std::size_t>(g)];
  const auto& block = blocks_[static_cast<std::size_t>(b)];
  SparseRow local = block.ech->reduce(
      {{col_local_[static_cast<std::size_t>(g)], coeff * Rational(c.sign)}});
  // Lift back to global column ids.
  for (auto& [col, value] : local) col = block.cols[static_cast<std::size_t>(col)];
  return local;
}

LaurentPoly QuotientModel::character_on(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != n_)
    throw std::invalid_argument("character_on: permutation arity mismatch");
  LaurentPoly chi;
  for (const auto& block : blocks_) {
    Rational trace(0);
    for (int local : block.ech->free_columns()) {
      const int g = block.cols[static_cast<std::size_t>(local)];
      SignedTree moved = canonicalize(relabel(monomials_[static_cast<std::size_t>(g)], sigma));
      const int j = global_index(moved.tree.encode());
      if (col_block_[static_cast<std::size_t>(j)] != block.t1)
        throw std::logic_error("character_on: relabeling left the bidegree block");
      const int jl = col_local_[static_cast<std::size_t>(j)];
      if (!block.ech->is_pivot(jl)) {
        if (jl == local) trace += Rational(moved.sign);
        continue;
      }
      SparseRow reduced = block.ech->reduce({{jl, Rational(moved.sign)}});
      for (const auto& [col, value] : reduced)
        if (col == local) {
          trace += value;
          break;
        }
    }
    // Torus weight of bidegree (t1, t2) is t1 - t2.
    const int weight = block.t1 - (n_ - 1 - block.t1);
    chi += LaurentPoly::q_power(weight, trace);
  }
  return chi;
}

int QuotientModel::rank_in_quotient(const std::vector<Tree>& family) const {
  // Concatenate the per-block free coordinates into one space.
  std::vector<int> free_offset(blocks_.size() + 1, 0);
  std::vector<std::unordered_map<int, int>> free_index(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto cols = blocks_[b].ech->free_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
      free_index[b].emplace(blocks_[b].cols[static_cast<std::size_t>(cols[i])],
                            static_cast<int>(i));
    free_offset[b + 1] = free_offset[b] + static_cast<int>(cols.size());
  }
  Echelonizer ech(free_offset.back());
  int rank = 0;
  for (const Tree& t : family) {
    SparseRow global = reduce_monomial(t, Rational(1));
    SparseRow coords;
    for (const auto& [g, value] : global) {
      const int b = col_block_[static_cast<std::size_t>(g)];
      coords.emplace_back(free_offset[static_cast<std::size_t>(b)] +
                              free_index[static_cast<std::size_t>(b)].at(g),
                          value);
    }
    std::sort(coords.begin(), coords.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (ech.add_row(std::move(coords))) ++rank;
  }
  return rank;
}

namespace {

constexpr const char* kCacheSchema = "biham-quotient-1";

}  // namespace

std::string QuotientModel::serialize() const {
  nlohmann::json j;
  j["schema"] = kCacheSchema;
  j["n"] = n_;
  nlohmann::json jblocks = nlohmann::json::array();
  for (const auto& block : blocks_) {
    nlohmann::json jb;
    jb["t1"] = block.t1;
    jb["pivots"] = block.ech->pivot_columns();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : block.ech->rows()) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& [col, coeff] : row) {
        jr.push_back(col);
        jr.push_back(coeff.str());
      }
      rows.push_back(std::move(jr));
    }
    jb["rows"] = std::move(rows);
    jblocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(jblocks);
  return j.dump();
}

QuotientModel QuotientModel::deserialize(const std::string& blob) {
  nlohmann::json j = nlohmann::json::parse(blob);
  if (j.at("schema").get<std::string>() != kCacheSchema)
    throw std::invalid_argument("QuotientModel cache: schema mismatch");
  QuotientModel model;
  model.index_monomials(j.at("n").get<int>());
  const auto& jblocks = j.at("blocks");
  if (jblocks.size() != model.blocks_.size())
    throw std::invalid_argument("QuotientModel cache: block count mismatch");
  for (std::size_t b = 0; b < model.blocks_.size(); ++b) {
    const auto& jb = jblocks[b];
    std::vector<int> pivots = jb.at("pivots").get<std::vector<int>>();
    std::vector<SparseRow> rows;
    for (const auto& jr : jb.at("rows")) {
      SparseRow row;
      for (std::size_t i = 0; i + 1 < jr.size(); i += 2)
        row.emplace_back(jr[i].get<int>(),
                         Rational::parse(jr[i + 1].get<std::string>()));
      rows.push_back(std::move(row));
    }
    model.blocks_[b].ech->restore(std::move(rows), std::move(pivots));
  }
  return model;
}

namespace {

std::filesystem::path cache_file(int n) {
  const char* dir = std::getenv("BIHAM_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) /
         ("quotient_n" + std::to_string(n) + "_" + kCacheSchema + ".json");
}

std::mutex g_model_mutex;
std::map<int, std::unique_ptr<QuotientModel>> g_models;

}  // namespace

const QuotientModel& quotient_model(int n, int jobs) {
  std::lock_guard<std::mutex> lock(g_model_mutex);
  auto it = g_models.find(n);
  if (it != g_models.end()) return *it->second;

  const auto path = cache_file(n);
  if (!path.empty() && std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      auto model = std::make_unique<QuotientModel>(QuotientModel::deserialize(buf.str()));
      return *g_models.emplace(n, std::move(model)).first->second;
    } catch (const std::exception&) {
      // Stale or foreign cache: fall through and rebuild.
    }
  }
  auto model = std::make_unique<QuotientModel>(QuotientModel::build(n, jobs));
  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) out << model->serialize();
  }
  return *g_models.emplace(n, std::move(model)).first->second;
}

std::vector<int> class_representative(const Exponents& rho) {
  const int n = degree_of(rho);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  int start = 1;
  for (int len = 1; len <= static_cast<int>(rho.size()); ++len)
    for (int rep = 0; rep < rho[static_cast<std::size_t>(len - 1)]; ++rep) {
      for (int i = 0; i < len; ++i)
        sigma[static_cast<std::size_t>(start - 1 + i)] = start + (i + 1) % len;
      start += len;
    }
  return sigma;
}

SymL full_character(int n, int jobs) {
  const QuotientModel& model = quotient_model(n, jobs);
  const auto classes = exponent_vectors_of_degree(n);
  std::vector<LaurentPoly> values(classes.size());
  parallel_for(static_cast<int>(classes.size()), jobs, [&](int i) {
    values[static_cast<std::size_t>(i)] =
        model.character_on(class_representative(classes[static_cast<std::size_t>(i)]));
  });
  SymL f(n);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    LaurentPoly coeff = values[i];
    coeff *= Rational(1) / z_of(classes[i]);
    f.add_term(classes[i], coeff);
  }
  return f;
}

}  // namespace biham
