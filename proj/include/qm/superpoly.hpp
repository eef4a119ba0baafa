#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qm {

using Q = mpq_class;

constexpr int kMaxGenerators = 64;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Parity : uint8_t { Even = 0, Odd = 1 };

// Generators carry a parity and a display name. "wedge" generators are
// rendered joined by ∧ (derivations, differentials).
class GeneratorTable {
 public:
  struct Gen {
    std::string name;
    Parity parity;
    bool wedge = false;
  };

  explicit GeneratorTable(std::vector<Gen> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Gen& gen(int i) const { return gens_.at(i); }
  const std::string& name(int i) const { return gens_.at(i).name; }
  bool odd(int i) const { return gens_[i].parity == Parity::Odd; }
  uint64_t odd_mask() const { return odd_mask_; }
  int index(const std::string& name) const;  // throws AlgebraError
  int find(const std::string& name) const;   // -1 when absent
  bool same(const GeneratorTable& o) const;

 private:
  std::vector<Gen> gens_;
  std::map<std::string, int> by_name_;
  uint64_t odd_mask_ = 0;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

TablePtr make_table(const std::vector<std::string>& names, const std::vector<Parity>& parities);

struct Mono {
  std::array<uint8_t, kMaxGenerators> e{};
  uint64_t odd = 0;  // bit i set iff odd generator i present

  int degree() const;
  int degree_in(uint64_t mask) const;
  bool operator<(const Mono& o) const;
  bool operator==(const Mono& o) const;
};

// sign of a*b relative to the sorted monomial; 0 if an odd generator repeats
int mono_mul_sign(const Mono& a, const Mono& b);
Mono mono_mul(const Mono& a, const Mono& b);

class SuperPoly {
 public:
  using Terms = std::map<Mono, Q>;

  SuperPoly() = default;
  explicit SuperPoly(TablePtr t) : table_(std::move(t)) {}

  static SuperPoly constant(TablePtr t, const Q& c);
  static SuperPoly gen(TablePtr t, int i);
  static SuperPoly gen(TablePtr t, const std::string& name);

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Mono& m, const Q& c);

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const Q& c);
  SuperPoly operator-() const;

  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(SuperPoly a, const Q& c) { return a *= c; }
  friend SuperPoly operator*(const Q& c, SuperPoly a) { return a *= c; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) { return multiply(a, b); }
  friend bool operator==(const SuperPoly& a, const SuperPoly& b);
  friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

  // max_degree < 0: no truncation
  static SuperPoly multiply(const SuperPoly& a, const SuperPoly& b, int max_degree = -1);

  Q body() const;
  Q coeff(const Mono& m) const;
  // 0 even, 1 odd, -1 inhomogeneous or zero
  int parity() const;
  SuperPoly even_part() const;
  SuperPoly odd_part() const;
  // -1 when zero or inhomogeneous
  int homogeneous_degree() const;
  SuperPoly degree_part(int d) const;
  SuperPoly truncated(int max_degree) const;
  int max_degree() const;

  SuperPoly lder(int i) const;
  SuperPoly rder(int i) const;
  SuperPoly lder(const std::string& name) const { return lder(table_->index(name)); }

  // images indexed by generator; missing entries mean identity
  SuperPoly substitute(const std::map<int, SuperPoly>& images) const;

  // same terms over another table with a generator index map old -> new
  SuperPoly reindexed(TablePtr target, const std::vector<int>& index_map) const;

  std::string str() const;

 private:
  void check_table(const SuperPoly& o) const;
  void adopt(const SuperPoly& o);

  TablePtr table_;
  Terms terms_;
};

SuperPoly parse_poly(const TablePtr& table, const std::string& text);

std::string render_rational(const Q& q);

}  // namespace qm
