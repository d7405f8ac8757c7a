#include "qtau/spec_json.hpp"

#include <fstream>

#include <json.hpp>

#include "qtau/errors.hpp"

namespace qtau {

using nlohmann::json;

namespace {

json braid_to_json_obj(const BraidLink& b) {
    json j;
    j["strands"] = b.strands;
    j["word"] = b.word;
    j["framings"] = b.framings;
    j["component_map"] = b.component_map;
    return j;
}

BraidLink braid_from_json_obj(const json& j) {
    BraidLink b;
    b.strands = j.at("strands").get<int>();
    b.word = j.at("word").get<std::vector<int>>();
    b.framings = j.at("framings").get<std::vector<long>>();
    b.component_map = j.at("component_map").get<std::vector<int>>();
    b.validate();
    return b;
}

json special_to_json_obj(const SpecialLink& s) {
    json j;
    switch (s.kind) {
        case SpecialLink::Kind::Unknot:
            j["kind"] = "unknot";
            j["framing"] = s.framings[0];
            break;
        case SpecialLink::Kind::Hopf:
            j["kind"] = "hopf";
            j["framings"] = s.framings;
            break;
        case SpecialLink::Kind::Trefoil:
            j["kind"] = "trefoil";
            j["chirality"] = s.chirality == Chirality::Left ? "left" : "right";
            j["framing"] = s.framings[0];
            break;
        case SpecialLink::Kind::FigureEight:
            j["kind"] = "figure_eight";
            j["framing"] = s.framings[0];
            break;
    }
    return j;
}

SpecialLink special_from_json_obj(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    SpecialLink s;
    if (kind == "unknot") {
        s.kind = SpecialLink::Kind::Unknot;
        s.framings = {j.at("framing").get<long>()};
    } else if (kind == "hopf") {
        s.kind = SpecialLink::Kind::Hopf;
        s.framings = j.at("framings").get<std::vector<long>>();
        if (s.framings.size() != 2)
            throw invalid_input_error("hopf link needs exactly two framings");
    } else if (kind == "trefoil") {
        s.kind = SpecialLink::Kind::Trefoil;
        std::string chir = j.value("chirality", "right");
        if (chir != "left" && chir != "right")
            throw invalid_input_error("trefoil chirality must be left or right");
        s.chirality = chir == "left" ? Chirality::Left : Chirality::Right;
        s.framings = {j.at("framing").get<long>()};
    } else if (kind == "figure_eight") {
        s.kind = SpecialLink::Kind::FigureEight;
        s.framings = {j.at("framing").get<long>()};
    } else {
        throw invalid_input_error("unknown special link kind: " + kind);
    }
    return s;
}

json spec_to_json_obj(const ManifoldSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["components"] = json::array();
    for (const auto& link : spec.components) {
        json c;
        if (link.is_special()) c["special"] = special_to_json_obj(link.special());
        else c["braid"] = braid_to_json_obj(link.braid());
        j["components"].push_back(c);
    }
    if (!spec.connected_sum.empty()) {
        j["connected_sum"] = json::array();
        for (const auto& child : spec.connected_sum)
            j["connected_sum"].push_back(spec_to_json_obj(child));
    }
    return j;
}

ManifoldSpec spec_from_json_obj(const json& j) {
    ManifoldSpec spec;
    spec.name = j.value("name", "");
    if (j.contains("components"))
        for (const auto& c : j.at("components")) {
            if (c.contains("special"))
                spec.components.push_back(FramedLink{special_from_json_obj(c.at("special"))});
            else if (c.contains("braid"))
                spec.components.push_back(FramedLink{braid_from_json_obj(c.at("braid"))});
            else
                throw invalid_input_error("component must be 'special' or 'braid'");
        }
    if (j.contains("connected_sum"))
        for (const auto& c : j.at("connected_sum"))
            spec.connected_sum.push_back(spec_from_json_obj(c));
    return spec;
}

} // namespace

ManifoldSpec parse_manifold_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw invalid_input_error(std::string("bad manifold spec JSON: ") + e.what());
    }
    try {
        return spec_from_json_obj(j);
    } catch (const json::exception& e) {
        throw invalid_input_error(std::string("bad manifold spec: ") + e.what());
    }
}

ManifoldSpec load_manifold_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open spec file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_manifold_spec(text);
}

std::string manifold_spec_to_json(const ManifoldSpec& spec) {
    return spec_to_json_obj(spec).dump(2);
}

BraidLink parse_braid_record(const std::string& json_text) {
    try {
        return braid_from_json_obj(json::parse(json_text));
    } catch (const json::exception& e) {
        throw invalid_input_error(std::string("bad braid record: ") + e.what());
    }
}

std::string braid_record_to_json(const BraidLink& braid) {
    return braid_to_json_obj(braid).dump(2);
}

} // namespace qtau
