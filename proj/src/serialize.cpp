#include "locring/serialize.hpp"

#include "locring/parse.hpp"

namespace locring {

namespace {

nlohmann::json ring_to_json(const QuotientRing& r) {
    return {{"p", r.base_poly().to_string()}, {"n", r.power()}, {"field", r.field().name()}};
}

QuotientRing ring_from_json(const nlohmann::json& j) {
    const Field k = parse_field(j.at("field").get<std::string>());
    const int n = j.at("n").get<int>();
    return QuotientRing::make(parse_poly(k, j.at("p").get<std::string>()), n);
}

}  // namespace

nlohmann::json morphism_to_json(const StabilizingMorphism& f) {
    return {{"source", ring_to_json(f.source())},
            {"target", ring_to_json(f.target())},
            {"sigma", f.sigma().to_string()},
            {"q_image", f.q_image().to_string()}};
}

StabilizingMorphism morphism_from_json(const nlohmann::json& j) {
    try {
        const QuotientRing source = ring_from_json(j.at("source"));
        const QuotientRing target = ring_from_json(j.at("target"));
        const auto sigma = FieldAutomorphism::parse(j.at("sigma").get<std::string>());
        return StabilizingMorphism::unchecked(source, target, sigma, parse_poly(target.field(), j.at("q_image").get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::ParseError, std::string("malformed morphism document: ") + e.what());
    }
}

std::string morphism_to_json_text(const StabilizingMorphism& f, int indent) { return morphism_to_json(f).dump(indent); }

StabilizingMorphism morphism_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return morphism_from_json(j);
}

}  // namespace locring
