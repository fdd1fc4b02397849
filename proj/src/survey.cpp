#include "locring/survey.hpp"

#include "locring/lift.hpp"
#include "locring/verify.hpp"

namespace locring {

namespace {

SurveyRow row_for(const Field& field, const StabilizingMorphism& residue, int n) {
    const LiftReport report = lift_is_isomorphism(residue, n);
    SurveyRow row{field.name(), residue.sigma().to_string(), residue.source().base_poly().to_string(),
                  residue.target().base_poly().to_string(), residue.source().base_poly().degree(), n,
                  report.q_f.to_string(), report.s_f.to_string(), report.verdict,
                  kernel_basis(morphism_matrix(lift_morphism(residue, n))).size()};
    return row;
}

}  // namespace

std::vector<SurveyRow> run_survey(const Field& field, const SurveyOptions& options) {
    if (!field.is_finite()) raise(ErrorKind::UnsupportedField, "surveys enumerate polynomials over finite fields, not " + field.name());
    if (options.max_degree < 1 || options.max_power < 1)
        raise(ErrorKind::InvalidArgument, "max degree and max power must be >= 1");

    std::vector<SurveyRow> rows;
    for (int d = 1; d <= options.max_degree; ++d) {
        const std::vector<Poly> irreducibles = enumerate_irreducibles(field, d);
        for (const Poly& p1 : irreducibles) {
            for (const Poly& p2 : irreducibles) {
                if (options.sigma) {
                    if (d == 1) continue;
                    const auto found = find_residue_isomorphisms(p1, p2, *options.sigma);
                    for (int n = 1; n <= options.max_power; ++n)
                        for (const auto& f : found) rows.push_back(row_for(field, f, n));
                    continue;
                }
                for (int n = 1; n <= options.max_power; ++n) {
                    const auto iso = rings_isomorphic_separable(p1, p2, n);
                    if (!iso) raise(ErrorKind::InvalidArgument, "no isomorphism found for " + p1.to_string() + ", " + p2.to_string());
                    SurveyRow row;
                    if (d == 1) {
                        // unreduced, since X itself vanishes modulo a linear P2 at n = 1
                        const Poly q_f = Poly::x(field) + Poly::constant(p2.coeff(0) - p1.coeff(0));
                        row = SurveyRow{field.name(), "id", p1.to_string(), p2.to_string(), d, n, q_f.to_string(), "1", true,
                                        kernel_basis(morphism_matrix(*iso)).size()};
                    } else {
                        row = row_for(field, induced_residue_morphism(*iso), n);
                    }
                    row.isomorphism_certified = certify_isomorphism(*iso);
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows) {
    out << kSurveyHeader << '\n';
    for (const auto& r : rows)
        out << r.field << ',' << r.sigma << ',' << r.p1 << ',' << r.p2 << ',' << r.degree << ',' << r.n << ',' << r.q_f << ','
            << r.s_f << ',' << (r.verdict ? "true" : "false") << ',' << r.kernel_dim << '\n';
}

}  // namespace locring
