// Line-oriented representative database.  One record per line:
//
//   type|label|kind|char_condition|root1,root2,...
//
// with roots written as Bourbaki digit strings in the ambient type.  Lines
// starting with '#' are comments, except the mandatory first line
//
//   #!chevrep-repdb fnv1a64:<16 hex digits>
//
// whose checksum covers every byte after that line.  Parsing rejects files
// whose checksum does not match, so transcription slips in the data surface
// as a load error, not as a wrong invariant later.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevrep/recognition.hpp"
#include "chevrep/rootsys.hpp"

namespace chevrep {

inline uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace detail {

inline std::string checksum_header(const std::string& payload) {
    std::ostringstream os;
    os << "#!chevrep-repdb fnv1a64:" << std::hex;
    os.width(16);
    os.fill('0');
    os << fnv1a64(payload);
    return os.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

// Parse the database text, verifying the checksum header.
inline std::vector<RepresentativeEntry> parse_representative_db(const std::string& text) {
    size_t eol = text.find('\n');
    if (eol == std::string::npos || text.rfind("#!chevrep-repdb fnv1a64:", 0) != 0)
        throw std::runtime_error("representative database: missing checksum header");
    std::string payload = text.substr(eol + 1);
    if (detail::checksum_header(payload) != text.substr(0, eol))
        throw std::runtime_error("representative database: checksum mismatch");

    std::vector<RepresentativeEntry> out;
    std::map<std::string, RootSystem> systems;
    std::istringstream in(payload);
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = detail::split(line, '|');
        if (fields.size() != 5)
            throw std::runtime_error("representative database: bad record at line " +
                                     std::to_string(lineno));
        RepresentativeEntry e;
        const std::string& ty = fields[0];
        if (ty.size() < 2 || !std::isdigit(static_cast<unsigned char>(ty[1])))
            throw std::runtime_error("representative database: bad type at line " +
                                     std::to_string(lineno));
        e.type = ty[0];
        e.rank = std::stoi(ty.substr(1));
        e.label = fields[1];
        if (fields[2] == "nilpotent")
            e.kind = Kind::nilpotent;
        else if (fields[2] == "unipotent")
            e.kind = Kind::unipotent;
        else
            throw std::runtime_error("representative database: bad kind at line " +
                                     std::to_string(lineno));
        e.char_condition = fields[3];
        char_condition_applies(e.char_condition, 5);  // syntax check only

        auto it = systems.find(ty);
        if (it == systems.end())
            it = systems.emplace(ty, RootSystem(e.type, e.rank)).first;
        const RootSystem& rs = it->second;
        bool all_simple = true;
        for (const auto& digits : detail::split(fields[4], ',')) {
            RootVec r = root_from_bourbaki_string(rs, digits);
            int height = 0;
            for (int c : r) height += c;
            if (height != 1) all_simple = false;
            e.support.push_back(std::move(r));
        }
        if (e.support.empty())
            throw std::runtime_error("representative database: empty support at line " +
                                     std::to_string(lineno));
        e.source = all_simple ? RepSource::levi_regular : RepSource::companion_reference;
        out.push_back(std::move(e));
    }
    return out;
}

inline std::string serialize_representative_db(const std::vector<RepresentativeEntry>& entries,
                                               const std::string& comment = {}) {
    std::ostringstream os;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string line;
        while (std::getline(cs, line)) os << "# " << line << "\n";
    }
    for (const auto& e : entries) {
        os << e.type << e.rank << '|' << e.label << '|'
           << (e.kind == Kind::nilpotent ? "nilpotent" : "unipotent") << '|' << e.char_condition
           << '|';
        for (size_t i = 0; i < e.support.size(); ++i) {
            if (i) os << ',';
            for (int c : e.support[i]) os << c;
        }
        os << "\n";
    }
    std::string payload = os.str();
    return detail::checksum_header(payload) + "\n" + payload;
}

inline std::vector<RepresentativeEntry> load_representative_db(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open representative database: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_representative_db(buf.str());
}

}  // namespace chevrep
