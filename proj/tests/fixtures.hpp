#pragma once

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef SINGULAR_LAB_FIXTURES
#error "SINGULAR_LAB_FIXTURES must name the fixtures directory"
#endif

inline nlohmann::json load_fixture(const std::string &name)
{
    std::ifstream in(std::string(SINGULAR_LAB_FIXTURES) + "/" + name);
    if (!in) {
        throw std::runtime_error("cannot open fixture " + name);
    }
    return nlohmann::json::parse(in);
}

inline std::string fixture_path(const std::string &name) { return std::string(SINGULAR_LAB_FIXTURES) + "/" + name; }
