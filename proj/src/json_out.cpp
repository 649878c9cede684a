#include "ffrunner/json_out.hpp"

namespace ffr {

ordered_json poly_json(const Poly& f) { return ordered_json(f.coeffs()); }

ordered_json family_json(const std::vector<Poly>& fs) {
    ordered_json arr = ordered_json::array();
    for (const Poly& f : fs) arr.push_back(poly_json(f));
    return arr;
}

ordered_json subspace_json(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < s.dim(); ++r) rows.push_back(s.basis_row(r));
    return ordered_json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", rows}};
}

ordered_json tail_witness_json(const Tail& alpha, int exponent_k) {
    return ordered_json{{"alpha", alpha.coeffs()}, {"exponent", -exponent_k}};
}

void put_field(ordered_json& j, const Field& field) {
    j["q"] = field.q();
    j["p"] = field.p();
    j["e"] = field.e();
    if (field.e() > 1) j["modulus"] = field.modulus();
}

ordered_json cover_json(const CoverReport& rep, const Field& field) {
    ordered_json j;
    put_field(j, field);
    j["k"] = rep.k;
    j["D"] = rep.D;
    j["covers_all"] = rep.covers_all;
    j["witness"] = rep.covers_all ? ordered_json(nullptr) : ordered_json(rep.witness);
    j["covered_count"] = rep.covered_count;
    j["per_polynomial_new"] = rep.per_polynomial_new;
    j["speeds"] = family_json(rep.speeds);
    j["duplicates_dropped"] = rep.duplicates_dropped;
    return j;
}

ordered_json sunflower_json(const SunflowerReport& rep, const Field& field) {
    ordered_json j;
    put_field(j, field);
    j["D"] = rep.D;
    j["found"] = rep.found;
    if (!rep.found) return j;
    j["n"] = rep.n;
    j["petals"] = family_json(rep.petals);
    j["core"] = subspace_json(*rep.core);
    ordered_json types = ordered_json::array();
    if (rep.type1) types.push_back("TYPE_I");
    if (rep.type2) types.push_back("TYPE_II");
    j["types"] = types;
    if (rep.type1_p) j["P"] = poly_json(*rep.type1_p);
    j["s_prime"] = family_json(rep.s_prime);
    j["s_double_prime"] = family_json(rep.s_double_prime);
    if (rep.type1) j["lambda_roots"] = rep.lambda_roots;
    return j;
}

}  // namespace ffr
