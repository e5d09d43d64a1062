#include "arith/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>
#include <stdexcept>

#include "arith/codec.hpp"

namespace arith {

namespace {

// Stack items for the token-level grammar. Non-negative values are literal
// symbol codes.
constexpr int kTerm = -1, kForm = -2, kOp = -3, kVar = -4;
constexpr int kZero = 1, kSucc = 3, kNot = 5, kOr = 7, kAll = 9, kLParen = 11, kRParen = 13, kEquals = 15,
              kPlus = 17, kTimes = 19, kFirstVar = 21;
constexpr double kEps = 1e-9;

using Stack = std::vector<int>;  // top at back

void push(Stack& s, std::initializer_list<int> items_top_last) { s.insert(s.end(), items_top_last); }

// All ways to consume `sym` from a stack of pending items.
void advance(Stack s, int sym, std::vector<Stack>& out) {
  if (s.empty()) return;
  const int top = s.back();
  s.pop_back();
  const bool var = sym >= kFirstVar;
  switch (top) {
    case kOp:
      if (sym == kPlus || sym == kTimes) out.push_back(std::move(s));
      return;
    case kVar:
      if (var) out.push_back(std::move(s));
      return;
    case kTerm:
      if (sym == kZero || var) {
        out.push_back(std::move(s));
      } else if (sym == kSucc) {
        push(s, {kRParen, kTerm, kLParen});
        out.push_back(std::move(s));
      } else if (sym == kLParen) {
        push(s, {kRParen, kTerm, kOp, kTerm});
        out.push_back(std::move(s));
      }
      return;
    case kForm:
      if (sym == kZero || var) {
        push(s, {kTerm, kEquals});
        out.push_back(std::move(s));
      } else if (sym == kSucc) {
        push(s, {kTerm, kEquals, kRParen, kTerm, kLParen});
        out.push_back(std::move(s));
      } else if (sym == kNot) {
        push(s, {kRParen, kForm, kLParen});
        out.push_back(std::move(s));
      } else if (sym == kAll) {
        push(s, {kRParen, kForm, kLParen, kVar});
        out.push_back(std::move(s));
      } else if (sym == kLParen) {
        Stack t = s;
        push(s, {kRParen, kForm, kOr, kForm});
        out.push_back(std::move(s));
        push(t, {kTerm, kEquals, kRParen, kTerm, kOp, kTerm});
        out.push_back(std::move(t));
      }
      return;
    default:
      if (sym == top) out.push_back(std::move(s));
      return;
  }
}

std::size_t min_remaining(const Stack& s) {
  std::size_t n = 0;
  for (int x : s) n += x == kForm ? 3 : 1;
  return n;
}

struct Candidate {
  Formula formula;
  GoedelNumber code;
  double cost;  // log2 of the code
};

// log2 of the (i+1)-th prime, 0-based position in a symbol string.
double log2_prime(std::size_t i) {
  static const std::vector<double> table = [] {
    std::vector<double> t;
    for (std::size_t k = 1; k <= 256; ++k) t.push_back(std::log2(static_cast<double>(prime(k))));
    return t;
  }();
  return i < table.size() ? table[i] : std::log2(static_cast<double>(prime(i + 1)));
}

// Every one-free-variable formula whose code has log2 at most `bound`.
class Scanner {
 public:
  explicit Scanner(double bound) : bound_(bound) {}

  std::vector<Candidate> run() {
    std::vector<Stack> start = {Stack{kForm}};
    dfs(start, 0.0);
    return std::move(found_);
  }

 private:
  void dfs(std::vector<Stack>& stacks, double cost) {
    const std::size_t pos = syms_.size();
    std::size_t need = SIZE_MAX;
    bool complete = false;
    for (const auto& s : stacks) {
      if (s.empty()) {
        complete = true;
      } else {
        need = std::min(need, min_remaining(s));
      }
    }
    if (complete) record(cost);
    if (need == SIZE_MAX) return;
    double rest = 0;  // cheapest possible tail beyond this position
    for (std::size_t j = pos + 1; j < pos + need; ++j) rest += log2_prime(j);
    const double w = log2_prime(pos);
    for (int c = 1;; c += 2) {
      const double next = cost + c * w;
      if (next + rest > bound_ + kEps) break;
      std::vector<Stack> moved;
      for (const auto& s : stacks) {
        if (!s.empty()) advance(s, c, moved);
      }
      if (moved.empty()) {
        if (c >= kFirstVar) break;  // variables are interchangeable here
        continue;
      }
      std::sort(moved.begin(), moved.end());
      moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
      syms_.push_back(c);
      dfs(moved, next);
      syms_.pop_back();
    }
  }

  void record(double cost) {
    std::vector<Symbol> syms;
    syms.reserve(syms_.size());
    for (int c : syms_) syms.push_back(codec::symbol_from_code(GoedelNumber(static_cast<std::uint64_t>(c))));
    Formula f = Formula::eq(Term::zero(), Term::zero());
    if (!formula_from_symbols(syms, &f)) return;
    if (free_vars(f).size() != 1) return;
    found_.push_back({f, codec::formula_code(f), cost});
  }

  double bound_;
  std::vector<int> syms_;
  std::vector<Candidate> found_;
};

// Process-wide cache of the sorted sequence, extended on demand.
class Sequence {
 public:
  const Candidate& at(std::uint64_t n) {
    std::lock_guard lock(mu_);
    while (trusted_ < n) grow();
    return items_[n - 1];
  }

  std::uint64_t rank(const Formula& f, double cost) {
    std::lock_guard lock(mu_);
    while (bound_ < cost + 1.0) grow();
    for (std::size_t i = 0; i < trusted_; ++i) {
      if (items_[i].formula == f) return i + 1;
    }
    throw std::logic_error("enumeration missed a formula");
  }

 private:
  void grow() {
    bound_ = bound_ == 0 ? 64.0 : bound_ + 16.0;
    items_ = Scanner(bound_).run();
    std::sort(items_.begin(), items_.end(), [](const Candidate& a, const Candidate& b) { return a.code < b.code; });
    // Everything below a trusted entry is guaranteed to have been scanned.
    trusted_ = 0;
    while (trusted_ < items_.size() && items_[trusted_].cost <= bound_ - 1e-6) ++trusted_;
  }

  std::mutex mu_;
  double bound_ = 0;
  std::vector<Candidate> items_;
  std::size_t trusted_ = 0;
};

Sequence& sequence() {
  static Sequence s;
  return s;
}

}  // namespace

PhiIndex phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("phi: rank starts at 1");
  const Candidate& c = sequence().at(n);
  return {n, c.formula, c.code};
}

std::vector<PhiIndex> phi_prefix(std::uint64_t count) {
  std::vector<PhiIndex> out;
  if (count > 0) sequence().at(count);
  for (std::uint64_t n = 1; n <= count; ++n) out.push_back(phi(n));
  return out;
}

std::uint64_t index_of(const Formula& f) {
  if (free_vars(f).size() != 1) throw std::invalid_argument("index_of: formula must have exactly one free variable");
  const double cost = codec::formula_code(f).approx_log2();
  if (cost > kMaxIndexLog2) {
    throw DomainError("index_of: code beyond the enumeration limit (log2 " + std::to_string(cost) + ")");
  }
  return sequence().rank(f, cost);
}

Formula diag_formula(std::uint64_t n) {
  const PhiIndex p = phi(n);
  return subst_numeral(p.formula, *free_vars(p.formula).begin(), n);
}

GoedelNumber diag(std::uint64_t n) { return codec::formula_code(diag_formula(n)); }

std::string_view to_string(KEvidence::Kind k) {
  switch (k) {
    case KEvidence::Kind::NotInK: return "NotInK";
    case KEvidence::Kind::InKSuggested: return "InKSuggested";
    case KEvidence::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

KEvidence k_member_bounded(std::uint64_t n, const SearchBudget& b, unsigned workers) {
  const Verdict v = decide_bounded(diag_formula(n), b, Calculus::standard(), workers);
  KEvidence e;
  e.budget = b;
  switch (v.kind) {
    case Verdict::Kind::Provable:
      e.kind = KEvidence::Kind::NotInK;
      e.witness = v.witness;
      break;
    case Verdict::Kind::Refutable:
      e.kind = KEvidence::Kind::InKSuggested;
      e.witness = v.witness;
      break;
    case Verdict::Kind::Unknown: break;
  }
  return e;
}

}  // namespace arith
