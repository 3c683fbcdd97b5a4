#pragma once

// The catalog of intersection-subspace types for partial queens: for each
// type, the placement count alpha(U;n) in closed form, the Moebius value, the
// number of subspaces per pattern, and the constraint patterns whose brute
// counts must reproduce the closed form.  Summing the catalog reassembles
// q!*u(q;n) by inclusion-exclusion.

#include <functional>
#include <string>
#include <vector>

#include "qqueens/core.hpp"
#include "qqueens/enumerator.hpp"
#include "qqueens/numeric.hpp"
#include "qqueens/quasipoly.hpp"

namespace qq {

struct SubspaceCase {
    std::string type;   // e.g. "U3b^2"
    std::string label;  // case within the type, e.g. "DD"; empty if unsplit
    int codim = 0;
    int kappa = 0;
    std::function<bool(int h, int k)> applies;
    /// Brute count is the sum over the family.
    std::function<std::vector<ConstraintPattern>(int h, int k)> family;
    std::function<QuasiPolynomial(int h, int k)> closed_form;
    std::function<long(int h, int k)> moebius;
    /// Subspaces of this type per pattern in the family, as a function of q.
    std::function<Rational(long q)> multiplicity;
    std::string note;

    std::string name() const { return label.empty() ? type : type + "." + label; }
};

/// Every case, in a fixed order.
const std::vector<SubspaceCase>& case_catalog();
/// Distinct type names, in catalog order (17 of them).
std::vector<std::string> catalog_types();
/// Throws InvalidArgument for an unknown name.
const SubspaceCase& find_case(const std::string& name);

struct CaseAudit {
    std::string name;
    int h = 0;
    int k = 0;
    int n = 0;
    BigInt brute;
    Rational closed;
    bool match = false;
};

/// Throws InvalidArgument if the case does not apply to (h,k) or n < 1.
CaseAudit audit_case(const SubspaceCase& c, int h, int k, int n);

/// Audits every applicable (case, h, k) for n = 1..n_max.  Work is spread
/// over threads; the result order is catalog, then (h,k), then n.
std::vector<CaseAudit> audit_all(int n_max, unsigned threads = 0);

/// (n^2 + 2n + eps)/4 with eps = (1 - (-1)^n)/2.
BigInt triangle_points(long n);

/// q!*u(q;n) assembled from brute pattern counts, q in {1,2,3}.
BigInt assemble_labelled_count(int h, int k, int q, int n);

/// The same sum built from the closed forms, as a quasipolynomial in n.
/// Complete only for q <= 3.
QuasiPolynomial assemble_closed(int h, int k, int q);

/// Contribution to u(q;n) (already divided by q!) of every catalog case of
/// codimension nu <= 3, from the closed forms.  Valid for all q >= 1.
QuasiPolynomial catalog_codim_total(int h, int k, long q, int nu);

/// Coefficient of n^{2q-i} in u(q;n), i <= 3, from the catalog.
CoeffDecomposition gamma_from_audit(int h, int k, long q, int i);

nlohmann::json to_json(const CaseAudit& a);

}  // namespace qq
