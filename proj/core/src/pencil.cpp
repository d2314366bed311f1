#include "poissonz/pencil.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "poissonz/univariate.hpp"

namespace poissonz {

namespace {

// 0, 1, -1, 2, -2, ...
Rat scan_param(std::size_t i) {
  long k = static_cast<long>((i + 1) / 2);
  return Rat(i % 2 == 1 ? k : -k);
}

bool proportional(const Mat& x, const Mat& y) {
  std::vector<Vec> rows(2);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      rows[0].push_back(x(r, c));
      rows[1].push_back(y(r, c));
    }
  return span_dim(rows, rows[0].size()) <= 1;
}

Rat bilinear(const Mat& m, const Vec& u, const Vec& w) { return dot(u, m * w); }

std::size_t cap_dim(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t n) {
  return intersect_spans(a, b, n).size();
}

}  // namespace

std::string to_string(const PencilParam& b) { return b ? poissonz::to_string(*b) : std::string("inf"); }

Pencil::Pencil(Mat a, Mat b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || a_.rows() != b_.rows())
    throw Error("pencil matrices must be square of one size");
  if (!a_.is_skew() || !b_.is_skew()) throw Error("pencil matrices must be skew-symmetric");
  // Singular finite members are roots of a nonzero polynomial of degree <= n/2.
  m_ = rank(b_);
  for (std::size_t i = 0; i <= n() / 2 + 1; ++i) m_ = std::max(m_, rank(member(scan_param(i))));
}

Mat Pencil::member(const PencilParam& t) const {
  if (!t) return b_;
  return a_ + *t * b_;
}

GenericRankL generic_rank_and_L(const Pencil& p, std::size_t sample_count) {
  if (sample_count == 0) throw Error("need at least one regular member");
  GenericRankL out;
  out.m = p.generic_rank();
  std::size_t n = p.n();
  SpanTracker span(n);
  std::size_t limit = 2 * (n + sample_count) + 10;
  std::size_t found = 0;
  bool stable_checked = false;
  for (std::size_t i = 0; i < limit && !stable_checked; ++i) {
    Rat t = scan_param(i);
    Mat x = p.member(t);
    RankKernel rk = rank_kernel(x);
    if (rk.rank != out.m) continue;
    if (found == sample_count) {
      for (const auto& v : rk.kernel)
        if (span.add(v)) throw Error("kernel sum did not stabilize");
      stable_checked = true;
      break;
    }
    out.params.push_back(t);
    for (const auto& v : rk.kernel) span.add(v);
    ++found;
  }
  if (!stable_checked) throw Error("too few regular members in the scan range");
  std::vector<Vec> all;
  for (std::size_t i = 0; i < out.params.size(); ++i) {
    auto k = rank_kernel(p.member(out.params[i])).kernel;
    all.insert(all.end(), k.begin(), k.end());
  }
  out.L = span_basis(all, n);
  return out;
}

GenericRankL generic_rank_and_L(const Pencil& p) { return generic_rank_and_L(p, p.n() + 1); }

SingularMembers singular_members(const Pencil& p) {
  SingularMembers out;
  std::size_t n = p.n(), m = p.generic_rank();
  out.at_infinity = rank(p.b()) < m;
  if (m == 0) return out;
  Vec xs;
  for (std::size_t i = 0; i <= m / 2; ++i) xs.push_back(scan_param(i));
  std::vector<Mat> members;
  for (const auto& x : xs) members.push_back(p.member(x));
  UPoly g;
  for (const auto& s : subsets(n, m)) {
    Vec ys;
    for (const auto& x : members) ys.push_back(pfaffian(x.submatrix(s, s)));
    g = gcd(g, interpolate(xs, ys));
    if (g.degree() == 0) break;
  }
  if (g.is_zero()) throw Error("generic rank is not attained by any finite member");
  if (g.degree() <= 0) return out;
  RationalRoots rr = rational_roots(g);
  out.finite = rr.roots;
  out.leftover_degrees = rr.leftover_factor_degrees;
  out.non_rational = !rr.leftover_factor_degrees.empty() || !rr.complete;
  return out;
}

VerificationReport orthogonality_check(const Pencil& p, const std::vector<PencilParam>& members) {
  VerificationReport rep;
  auto L = generic_rank_and_L(p).L;
  std::size_t tested = 0, bad = 0;
  std::string witness;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      Mat x = p.member(members[i]), y = p.member(members[j]);
      if (x.is_zero() || y.is_zero()) continue;
      ++tested;
      bool ok = true;
      for (const auto& u : rank_kernel(y).kernel)
        for (const auto& w : L)
          if (sgn(bilinear(x, u, w)) != 0) ok = false;
      if (!ok && bad++ == 0) witness = "member " + to_string(members[i]) + " on ker of member " + to_string(members[j]);
    }
  rep.add("orthogonality A(ker B, L) = 0", "0 failing of " + std::to_string(tested),
          std::to_string(bad) + " failing of " + std::to_string(tested), bad == 0, witness);
  return rep;
}

VerificationReport bound_and_sumdim_check(const Pencil& p, const PencilParam& c) {
  VerificationReport rep;
  std::size_t n = p.n(), m = p.generic_rank();
  Mat cm = p.member(c);
  auto u = rank_kernel(cm).kernel;
  if (rank(cm) == m) throw Error("member " + to_string(c) + " is regular; a singular member is required");
  // A zero member (all of one line) is compared against whichever generator is nonzero.
  Mat other = cm.is_zero() ? (p.a().is_zero() ? p.b() : p.a()) : (!proportional(p.a(), cm) ? p.a() : p.b());
  if (other.is_zero() || (!cm.is_zero() && proportional(other, cm))) throw Error("pencil is one-dimensional");
  std::size_t r = u.empty() ? 0 : rank(restrict_form(other, u));
  std::size_t d = n - m;
  long bound = static_cast<long>(u.size()) - static_cast<long>(d);
  rep.add("rank bound on ker C", "<= " + std::to_string(bound), std::to_string(r), static_cast<long>(r) <= bound);
  SingularMembers sm = singular_members(p);
  std::size_t lines = sm.finite.size() + (sm.at_infinity ? 1 : 0);
  bool single_line = !sm.non_rational && lines == 1 &&
                     ((c && sm.finite.size() == 1 && sm.finite[0] == *c) || (!c && sm.at_infinity));
  bool applicable = single_line && static_cast<long>(r) == bound;
  if (!applicable) {
    rep.add("dimension theorem", "applicable or skipped", "not applicable", true);
    return rep;
  }
  auto L = generic_rank_and_L(p).L;
  std::size_t cap = cap_dim(L, u, n);
  rep.add("dim (L meet U)", std::to_string(d), std::to_string(cap), cap == d);
  std::size_t want = d + (n - u.size()) / 2;
  rep.add("dim L", std::to_string(want), std::to_string(L.size()), L.size() == want);
  return rep;
}

JkSummary jk_summary(const Pencil& p) {
  JkSummary j;
  j.d_prime = p.n() - p.generic_rank();
  j.dim_L = generic_rank_and_L(p).L.size();
  j.sum_k = j.dim_L - j.d_prime;
  j.singular = singular_members(p);
  for (const auto& b : j.singular.finite) j.kernel_dims.emplace_back(to_string(b), p.n() - rank(p.member(b)));
  if (j.singular.at_infinity) j.kernel_dims.emplace_back("inf", p.n() - rank(p.b()));
  return j;
}

Pencil parse_pencil(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) throw Error("pencil file is empty");
  Rat size = parse_rat(tokens[0]);
  if (size.get_den() != 1 || size <= 0 || size > 64) throw Error("pencil size must be a positive integer up to 64");
  std::size_t n = size.get_num().get_ui();
  if (tokens.size() != 1 + 2 * n * n)
    throw Error("pencil file needs " + std::to_string(2 * n * n) + " entries after the size, found " +
                std::to_string(tokens.size() - 1));
  Mat a(n, n), b(n, n);
  std::size_t k = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = parse_rat(tokens[k++]);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b(r, c) = parse_rat(tokens[k++]);
  return Pencil(std::move(a), std::move(b));
}

Pencil read_pencil_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pencil file '" + path + "'");
  return parse_pencil(in);
}

Pencil kronecker_block(std::size_t k) {
  std::size_t n = 2 * k + 1;
  Mat a(n, n), b(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    a(i, k + i) = 1;
    a(k + i, i) = -1;
    b(i, k + i + 1) = 1;
    b(k + i + 1, i) = -1;
  }
  return Pencil(std::move(a), std::move(b));
}

Pencil jordan_block(const Rat& lambda, std::size_t s) {
  if (s == 0) throw Error("Jordan block needs positive size");
  std::size_t n = 2 * s;
  Mat a(n, n), b(n, n);
  for (std::size_t i = 0; i < s; ++i) {
    a(i, s + i) = lambda;
    a(s + i, i) = -lambda;
    if (i + 1 < s) {
      a(i, s + i + 1) = 1;
      a(s + i + 1, i) = -1;
    }
    b(i, s + i) = -1;
    b(s + i, i) = 1;
  }
  return Pencil(std::move(a), std::move(b));
}

Pencil direct_sum(const std::vector<Pencil>& blocks) {
  std::size_t n = 0;
  for (const auto& p : blocks) n += p.n();
  Mat a(n, n), b(n, n);
  std::size_t off = 0;
  for (const auto& p : blocks) {
    for (std::size_t r = 0; r < p.n(); ++r)
      for (std::size_t c = 0; c < p.n(); ++c) {
        a(off + r, off + c) = p.a()(r, c);
        b(off + r, off + c) = p.b()(r, c);
      }
    off += p.n();
  }
  return Pencil(std::move(a), std::move(b));
}

Pencil congruence(const Pencil& p, const Mat& q) {
  Mat qt = q.transpose();
  return Pencil(qt * p.a() * q, qt * p.b() * q);
}

std::size_t BlockPencil::sum_k() const {
  std::size_t s = 0;
  for (auto k : kronecker) s += k;
  return s;
}

BlockPencil random_block_pencil(Sampler& s, std::size_t max_n) {
  if (max_n < 1) throw Error("random pencil needs room for a block");
  bool shared = s.below(2) == 0;  // one eigenvalue and 2-dim Jordan blocks only
  Rat lambda(static_cast<long>(s.below(5)) - 2);
  std::vector<Pencil> blocks;
  BlockPencil out{Pencil(Mat(0, 0), Mat(0, 0)), {}, {}};
  std::size_t used = 0;
  std::size_t want = 1 + s.below(4);
  for (std::size_t i = 0; i < want; ++i) {
    bool kron = s.below(2) == 0;
    if (kron) {
      std::size_t k = s.below(3);
      if (used + 2 * k + 1 > max_n) continue;
      blocks.push_back(kronecker_block(k));
      out.kronecker.push_back(k);
      used += 2 * k + 1;
    } else {
      std::size_t sz = shared ? 1 : 1 + s.below(2);
      Rat l = shared ? lambda : Rat(static_cast<long>(s.below(5)) - 2);
      if (used + 2 * sz > max_n) continue;
      blocks.push_back(jordan_block(l, sz));
      out.jordan.emplace_back(l, sz);
      used += 2 * sz;
    }
  }
  if (blocks.empty()) {
    blocks.push_back(kronecker_block(0));
    out.kronecker.push_back(0);
    used = 1;
  }
  Pencil base = direct_sum(blocks);
  Mat q;
  do {
    q = Mat(used, used);
    for (std::size_t r = 0; r < used; ++r)
      for (std::size_t c = 0; c < used; ++c) q(r, c) = Rat(static_cast<long>(s.below(7)) - 3);
  } while (sgn(determinant(q)) == 0);
  out.pencil = congruence(base, q);
  return out;
}

}  // namespace poissonz
