#include <orthowg/wordparse.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace orthowg {

namespace {

bool is_haar_token(const std::string& body) {
    if (body.empty() || body[0] != 'o') return false;
    return std::all_of(body.begin() + 1, body.end(), [](char c) { return std::isdigit(c) != 0; });
}

Factor parse_token(const std::string& tok, size_t pos) {
    std::string body = tok;
    bool inverse = false, transpose = false;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
        body = tok.substr(0, caret);
        std::string suffix = tok.substr(caret);
        if (suffix == "^-1")
            inverse = true;
        else if (suffix == "^t")
            transpose = true;
        else
            throw ParseError(pos + caret, "unknown suffix '" + suffix + "' (expected ^-1 or ^t)");
    }
    if (body.empty()) throw ParseError(pos, "empty factor");
    if (is_haar_token(body)) {
        if (transpose)
            throw ParseError(pos, "haar factors take ^-1, not ^t (O^t = O^-1)");
        int label = body.size() == 1 ? 1 : std::stoi(body.substr(1));
        if (label < 1) throw ParseError(pos, "haar labels start at 1");
        return HaarFactor{label, inverse};
    }
    if (inverse) throw ParseError(pos, "matrix symbols take ^t, not ^-1");
    for (char c : body)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw ParseError(pos, std::string("bad character '") + c + "' in symbol");
    return SymFactor{body, transpose};
}

}  // namespace

WordAst parse_word(const std::string& text) {
    WordAst ast;
    std::vector<Factor> current;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] == ';') {
            if (current.empty()) throw ParseError(i, "empty trace before ';'");
            ast.traces.push_back(std::move(current));
            current.clear();
            ++i;
            continue;
        }
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != ';')
            ++i;
        current.push_back(parse_token(text.substr(start, i - start), start));
    }
    if (current.empty()) throw ParseError(text.size(), "empty trace");
    ast.traces.push_back(std::move(current));
    return ast;
}

std::string print_word(const WordAst& ast) {
    std::ostringstream os;
    for (size_t t = 0; t < ast.traces.size(); ++t) {
        if (t) os << " ; ";
        for (size_t f = 0; f < ast.traces[t].size(); ++f) {
            if (f) os << " ";
            const Factor& factor = ast.traces[t][f];
            if (std::holds_alternative<HaarFactor>(factor)) {
                const auto& h = std::get<HaarFactor>(factor);
                os << "o";
                if (h.label != 1) os << h.label;
                if (h.inverse) os << "^-1";
            } else {
                const auto& s = std::get<SymFactor>(factor);
                os << s.id;
                if (s.transpose) os << "^t";
            }
        }
    }
    return os.str();
}

WordSpec to_word_spec(const WordAst& ast) {
    WordSpec spec;
    for (const auto& trace : ast.traces) {
        auto first_haar = std::find_if(trace.begin(), trace.end(), [](const Factor& f) {
            return std::holds_alternative<HaarFactor>(f);
        });
        if (first_haar == trace.end()) {
            Word w;
            for (const auto& f : trace) {
                const auto& s = std::get<SymFactor>(f);
                w.push_back(Symbol{s.id, s.transpose});
            }
            spec.plain_traces.push_back(std::move(w));
            continue;
        }
        // rotate so the trace starts at a haar factor
        std::vector<Factor> rotated(first_haar, trace.end());
        rotated.insert(rotated.end(), trace.begin(), first_haar);
        std::vector<Slot> slots;
        for (const auto& f : rotated) {
            if (std::holds_alternative<HaarFactor>(f)) {
                const auto& h = std::get<HaarFactor>(f);
                slots.push_back(Slot{h.label, h.inverse ? -1 : 1, {}});
            } else {
                const auto& s = std::get<SymFactor>(f);
                slots.back().word.push_back(Symbol{s.id, s.transpose});
            }
        }
        spec.haar_traces.push_back(std::move(slots));
    }
    return spec;
}

}  // namespace orthowg
