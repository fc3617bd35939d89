#include "mspotty/codespec.hpp"

#include <fstream>
#include <sstream>

namespace mspotty {

LinearCode CodeSpecFile::first_code(uint64_t budget) const {
    return span(ring, b, n, generators, budget);
}

LinearCode CodeSpecFile::second_code(uint64_t budget) const {
    if (!has_second()) throw DomainError("code spec has no second code block");
    return span(ring, b, n, generators2, budget);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

uint32_t parse_kv(const std::string& tok, const char* key, size_t line_no) {
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected " + prefix + "<int>");
    try {
        return static_cast<uint32_t>(std::stoul(tok.substr(prefix.size())));
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad integer in " + tok);
    }
}

}  // namespace

CodeSpecFile parse_code_spec(std::istream& in) {
    CodeSpecFile out;
    bool have_ring = false, have_bytes = false;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& head = tokens[0];
        if (head == "ring") {
            if (have_ring) throw ParseError("line " + std::to_string(line_no) + ": duplicate ring line");
            try {
                out.ring = make_ring(parse_ring_spec(std::span(tokens).subspan(1)));
            } catch (const ConfigError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
            have_ring = true;
        } else if (head == "bytes") {
            if (tokens.size() != 3)
                throw ParseError("line " + std::to_string(line_no) + ": expected bytes b=<b> n=<n>");
            out.b = parse_kv(tokens[1], "b", line_no);
            out.n = parse_kv(tokens[2], "n", line_no);
            if (out.b < 1 || out.n < 1)
                throw ParseError("line " + std::to_string(line_no) + ": byte geometry must be positive");
            have_bytes = true;
        } else if (head == "gen" || head == "gen2") {
            if (!have_ring || !have_bytes)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": ring and bytes must precede generators");
            const uint32_t len = out.b * out.n;
            if (tokens.size() != size_t(len) + 1)
                throw ParseError("line " + std::to_string(line_no) + ": generator needs " +
                                 std::to_string(len) + " elements, got " +
                                 std::to_string(tokens.size() - 1));
            std::vector<Elem> gen(len);
            for (uint32_t i = 0; i < len; ++i) {
                try {
                    gen[i] = out.ring->parse_element(tokens[i + 1]);
                } catch (const ParseError& e) {
                    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
                }
            }
            (head == "gen" ? out.generators : out.generators2).push_back(std::move(gen));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + head + "'");
        }
    }
    if (!have_ring) throw ParseError("code spec is missing the ring line");
    if (!have_bytes) throw ParseError("code spec is missing the bytes line");
    return out;
}

CodeSpecFile parse_code_spec_text(const std::string& text) {
    std::istringstream is(text);
    return parse_code_spec(is);
}

CodeSpecFile parse_code_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code spec file '" + path + "'");
    return parse_code_spec(in);
}

}  // namespace mspotty
