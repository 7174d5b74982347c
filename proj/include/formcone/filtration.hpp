#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "formcone/ideal.hpp"

namespace formcone {

// Memoized ascending ladder base + q^0, base + q^1, ... with Gröbner bases.
// Safe for concurrent readers.
class PowerLadder {
 public:
  explicit PowerLadder(PresentedIdeal q) : q_(std::move(q)) {}
  PresentedIdeal power(unsigned n);

 private:
  std::mutex mutex_;
  PresentedIdeal q_;
  std::deque<PresentedIdeal> powers_;
};

struct SystemElement {
  Polynomial element;
  unsigned degree = 0;
  // Element lies in q^cap (treated as lying in every power).
  bool zero_flag = false;
};

struct FiltrationParams {
  // Krull-intersection probe cap for initial degrees.
  unsigned probe_cap = 12;
  GbOptions gb;
};

enum class PresentationKind { rees, form_ring, form_module, cone };

// k[x, y]/H with x of weight 0 and y of weight 1 (y_j stands for the j-th
// generator of q). Cones from the fast path have no x variables.
struct GradedQuotientPresentation {
  PresentationKind kind = PresentationKind::form_ring;
  RingPtr ring;
  std::vector<std::uint32_t> weights;
  std::size_t num_x = 0;
  Ideal ideal;
  // Generators of q in the ambient ring, matched with the y variables.
  std::vector<Polynomial> q_generators;
  // Elimination basis of base + (y_j - f_j T) over k[T, x, y], used to lift
  // elements of q^c to degree-c forms.
  RingPtr rees_ring;
  std::shared_ptr<const GroebnerBasis> rees_gb;

  std::size_t num_y() const { return weights.size() - num_x; }
  std::string str() const;
};

struct GradedElement {
  Polynomial representative;
  std::uint32_t degree = 0;
};

// Weighted degree of a homogeneous polynomial; nullopt if inhomogeneous.
// The zero polynomial is homogeneous of every degree and reports 0.
std::optional<std::uint32_t> weighted_degree(const Polynomial& f,
                                             const std::vector<std::uint32_t>& weights);

struct InitialForm {
  Polynomial representative;
  unsigned degree = 0;
  bool zero_flag = false;
};

// The data (A, q, M, a) with A = P/I_A, cyclic M = A/I_M, q and a system of
// elements with initial degrees. Immutable; caches are write-once and shared
// by copies.
class FiltrationContext {
 public:
  struct ClaimedElement {
    Polynomial element;
    std::optional<unsigned> degree;
  };

  // Throws MathError if q is not proper in A or a system element is zero in
  // A, and InputError if a claimed degree differs from the initial degree.
  static FiltrationContext make(RingPtr ring, std::vector<Polynomial> base_gens,
                                std::vector<Polynomial> module_gens, std::vector<Polynomial> q_gens,
                                std::vector<ClaimedElement> system, FiltrationParams params = {});

  const RingPtr& ring() const { return ring_; }
  const FiltrationParams& params() const { return params_; }
  const std::shared_ptr<const Ideal>& base_ring_ideal() const { return base_a_; }
  const std::shared_ptr<const Ideal>& module_ideal() const { return base_m_; }
  const std::vector<Polynomial>& base_generators() const { return base_gens_; }
  const std::vector<Polynomial>& module_generators() const { return module_gens_; }
  const std::vector<Polynomial>& q_generators() const { return q_gens_; }
  const std::vector<SystemElement>& system() const { return system_; }

  // q as an ideal of A, and q M as an ideal over I_M.
  PresentedIdeal q_ring() const;
  PresentedIdeal q_module() const;
  // I_A + q^n and I_M + q^n.
  PresentedIdeal ring_power(unsigned n) const { return ladder_a_->power(n); }
  PresentedIdeal module_power(unsigned n) const { return ladder_m_->power(n); }

  // M = 0.
  bool module_is_zero() const { return base_m_->is_unit(); }
  // True iff V(q + I_M) is the origin, where affine and local data agree.
  bool supported_at_origin() const;

  const GradedQuotientPresentation& form_ring() const;    // G_A(q)
  const GradedQuotientPresentation& form_module() const;  // G_M(q)
  const GradedQuotientPresentation& rees_algebra() const;  // R_A(q)

  // Fresh context with I_M replaced by I_M + (b).
  FiltrationContext quotient_by(const Polynomial& b) const;

 private:
  struct Caches;
  RingPtr ring_;
  FiltrationParams params_;
  std::vector<Polynomial> base_gens_, module_gens_, q_gens_;
  std::vector<SystemElement> system_;
  std::shared_ptr<const Ideal> base_a_, base_m_;
  std::shared_ptr<PowerLadder> ladder_a_, ladder_m_;
  std::shared_ptr<Caches> caches_;
};

// Largest c < cap with a in q^c + I_A; nullopt when a lies in q^cap.
// Throws MathError if a is zero in A.
std::optional<unsigned> initial_degree(const FiltrationContext& ctx, const Polynomial& a,
                                       unsigned cap);
// Initial form of a as an element of M.
InitialForm initial_form(const FiltrationContext& ctx, const Polynomial& a);

// base + (y_j - f_j T), T eliminated. Base is I_A, or I_M for `module`.
GradedQuotientPresentation rees_presentation(const FiltrationContext& ctx, bool module = false);
enum class FormTarget { ring_of_a, module_m };
GradedQuotientPresentation form_presentation(const FiltrationContext& ctx, FormTarget target);
// k[x]/(lowest forms of I_M), for q the ideal of all variables. Throws
// MathError otherwise.
GradedQuotientPresentation tangent_cone_fast_path(const FiltrationContext& ctx);
FiltrationContext quotient_by_element(const FiltrationContext& ctx, const Polynomial& b);

// Degree-c form of a in the presentation; throws MathError if a is not in
// q^c + base. The result is reduced modulo the presentation ideal.
GradedElement lift_to_form(const GradedQuotientPresentation& g, const Polynomial& a, unsigned c);

// When every x variable is zero in g and each y_j stands for a distinct
// ambient variable, the presentation as an ideal of `target` (variables
// renamed y_j -> that variable). nullopt otherwise.
std::optional<Ideal> as_cone_ideal(const GradedQuotientPresentation& g, const RingPtr& target);

}  // namespace formcone
