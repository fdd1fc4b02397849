#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "locring/field.hpp"

namespace locring {

struct SurveyRow {
    std::string field;
    std::string sigma;
    std::string p1;
    std::string p2;
    int degree = 0;
    int n = 0;
    std::string q_f;
    std::string s_f;
    bool verdict = false;
    std::size_t kernel_dim = 0;
    /// The morphism reported by rings_isomorphic_separable was certified
    /// (always true in per-morphism mode, where it is not computed).
    bool isomorphism_certified = true;

    /// verdict <=> kernel_dim = 0, and the certificate above.
    bool consistent() const { return verdict == (kernel_dim == 0) && isomorphism_certified; }
};

struct SurveyOptions {
    int max_degree = 2;
    int max_power = 2;
    /// Unset: one row per (P1, P2, n) from rings_isomorphic_separable.
    /// Set: one row per residue morphism with this sigma found by the search.
    std::optional<FieldAutomorphism> sigma;
};

/// Ordered by (degree, P1, P2, n) with polynomials in index order, then Q_f.
/// Finite fields only.
std::vector<SurveyRow> run_survey(const Field& field, const SurveyOptions& options);

inline constexpr const char* kSurveyHeader = "field,sigma,p1,p2,degree,n,q_f,s_f,verdict,kernel_dim";

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows);

}  // namespace locring
