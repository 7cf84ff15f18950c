#pragma once

#include <map>
#include <string>
#include <vector>

#include "superkit/spinor.hpp"
#include "superkit/vectorfield.hpp"

namespace superkit {

/// A named superspace chart bundled with translation generators P, SUSY
/// generators Q, and SUSY covariant derivatives D. The constructor-side
/// builders verify the full expected bracket table exactly before returning,
/// and record the structure constants {Q^a, Q^b} = sum_mu qq[a][b][mu] P_mu
/// read back from the verified brackets.
struct SuperspaceModel {
  std::string name;
  Context ctx;
  std::vector<SymbolId> even_coords;
  std::vector<SymbolId> odd_coords;
  std::vector<SuperVectorField> p;
  std::vector<SuperVectorField> q;
  std::vector<SuperVectorField> d;
  std::vector<std::vector<std::vector<Rational>>> qq;
  bool translation_nilpotent = false;
};

/// R^{1|1} with P = d/dt and Q = d/dtheta + c theta d/dt; the physical value
/// is c = 1/4, anything else trips the bracket verification (negative
/// control).
SuperspaceModel build_r11(const Rational& c = rat(1, 4));

/// R^{1|2} with two supersymmetries, {Q_I, Q_J} = 1/2 delta_IJ P.
SuperspaceModel build_r12(const Rational& c = rat(1, 4));

/// Super-Minkowski space M^{3,1|4} built on a gamma representation;
/// {Q^a, Q^b} = 1/2 (C gamma^mu)^{ab} P_mu.
SuperspaceModel build_super_minkowski(const GammaRep& rep,
                                      const Rational& c = rat(1, 4));

/// Lookup by the published chart names "R1|1", "R1|2", "M3,1|4".
SuperspaceModel build_model_by_name(const std::string& name);

/// Superfield: parity plus the component map from odd basis monomials
/// (ascending lists of odd chart coordinates) to function symbols, as in
/// 1 -> q, theta -> psi. Components multiply from the right of the monomial.
struct Superfield {
  Parity parity = Parity::Even;
  std::map<std::vector<SymbolId>, SymbolId> components;
};

SuperExpr expand(const SuperspaceModel& m, const Superfield& field);

/// Coefficient of the given odd basis monomial, with the sign of moving the
/// chart generators to the front.
SuperExpr extract_component(const SuperspaceModel& m, const SuperExpr& e,
                            const std::vector<SymbolId>& basis);

/// delta Phi = sum_I eps_I Q_I(Phi), re-expanded in the component basis;
/// returns each component's variation keyed by its function symbol.
std::map<SymbolId, SuperExpr> component_variations(
    const SuperspaceModel& m, const Superfield& field,
    const std::vector<SymbolId>& eps);

/// The SUSY shift as a coordinate substitution, with the x-shift coefficient
/// derived from the verified structure constants:
/// x^mu -> x^mu + 1/2 sum qq[a][b][mu] eps_b theta_a, theta_a -> theta_a + eps_a.
std::map<SymbolId, SuperExpr> susy_shift(const SuperspaceModel& m,
                                         const std::vector<SymbolId>& eps);

struct ActionSpec {
  SuperExpr integrand;  // density before Berezin integration; must be even
  SymbolId even_coord;
  std::vector<SymbolId> odd_measure;
};

/// Berezin-reduce the integrand over the odd measure; the result is a density
/// in the even coordinate and the component fields.
SuperExpr reduce_action(const ActionSpec& spec);

/// Graded variational derivative sum_k (-d/dt)^k d/d(field^{(k)}), with left
/// derivatives and Koszul signs for odd fields. Densities of derivative order
/// above two in the target field are rejected.
SuperExpr euler_lagrange(const SuperExpr& density, SymbolId field);

/// Function symbols of a single coordinate occurring in the density,
/// including through nested arguments such as W(q).
std::vector<SymbolId> dynamical_fields(const SuperExpr& density);

/// True iff the variational derivative vanishes for every dynamical field.
bool is_total_derivative(const SuperExpr& density);

/// Apply a first-order field variation delta(field) = var[field] as an even
/// derivation, reaching derivatives and nested arguments by the chain rule.
SuperExpr apply_field_variation(const SuperExpr& e,
                                const std::map<SymbolId, SuperExpr>& var);

/// Solve the linear equation of motion of an auxiliary field and substitute
/// it back into the density.
SuperExpr eliminate_auxiliary(const SuperExpr& density, SymbolId field);

/// Element x^mu P_mu + theta_a Q^a of the super translation algebra, with
/// even coefficients on P and odd coefficients on Q.
struct TranslationElement {
  std::vector<SuperExpr> x;
  std::vector<SuperExpr> th;
};

/// Group law A o B = A + B + 1/2 [A,B] through the Campbell-Baker-Hausdorff
/// formula, exact because the verified algebra is 2-step nilpotent. The
/// bracket is evaluated from the model's structure constants.
TranslationElement cbh_compose(const TranslationElement& a,
                               const TranslationElement& b,
                               const SuperspaceModel& m);

}  // namespace superkit
