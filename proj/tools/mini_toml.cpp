#include "mini_toml.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace minitoml {

namespace {

using json = nlohmann::ordered_json;

class Reader {
public:
    explicit Reader(const std::string& text) : s_(text) {}

    json document() {
        json root = json::object();
        json* table = &root;
        while (true) {
            skip_blank_lines();
            if (at_end()) return root;
            if (peek() == '[') {
                table = header(root);
            } else {
                std::vector<std::string> path = key();
                skip_inline_space();
                expect('=');
                skip_inline_space();
                json v = value();
                json* target = table;
                for (std::size_t x = 0; x + 1 < path.size(); ++x) target = &descend(*target, path[x]);
                if (target->contains(path.back())) fail("duplicate key '" + path.back() + "'");
                (*target)[path.back()] = std::move(v);
            }
            end_of_line();
        }
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::runtime_error("toml line " + std::to_string(line_) + ": " + why);
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() {
        char c = s_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }
    void skip_inline_space() {
        while (peek() == ' ' || peek() == '\t') get();
    }
    void skip_comment() {
        if (peek() == '#')
            while (!at_end() && peek() != '\n') get();
    }
    void skip_blank_lines() {
        while (!at_end()) {
            skip_inline_space();
            skip_comment();
            if (peek() == '\n' || peek() == '\r')
                get();
            else
                return;
        }
    }
    void skip_any_space() {  // inside arrays
        while (!at_end()) {
            skip_inline_space();
            skip_comment();
            if (peek() == '\n' || peek() == '\r')
                get();
            else
                return;
        }
    }
    void end_of_line() {
        skip_inline_space();
        skip_comment();
        if (peek() == '\r') get();
        if (!at_end() && peek() != '\n') fail("unexpected trailing text");
    }

    static json& descend(json& parent, const std::string& name) {
        json& child = parent[name];
        if (child.is_null()) child = json::object();
        if (child.is_array()) return child.back();
        return child;
    }

    json* header(json& root) {
        get();
        const bool array = peek() == '[';
        if (array) get();
        skip_inline_space();
        std::vector<std::string> path = key();
        skip_inline_space();
        expect(']');
        if (array) expect(']');
        json* t = &root;
        for (std::size_t x = 0; x + 1 < path.size(); ++x) t = &descend(*t, path[x]);
        json& slot = (*t)[path.back()];
        if (array) {
            if (slot.is_null()) slot = json::array();
            if (!slot.is_array()) fail("'" + path.back() + "' is not an array of tables");
            slot.push_back(json::object());
            return &slot.back();
        }
        if (!slot.is_null()) fail("table '" + path.back() + "' defined twice");
        slot = json::object();
        return &slot;
    }

    std::vector<std::string> key() {
        std::vector<std::string> parts;
        while (true) {
            skip_inline_space();
            if (peek() == '"' || peek() == '\'') {
                parts.push_back(string_value());
            } else {
                std::string k;
                while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-') k += get();
                if (k.empty()) fail("expected a key");
                parts.push_back(k);
            }
            skip_inline_space();
            if (peek() != '.') return parts;
            get();
        }
    }

    std::string string_value() {
        const char quote = get();
        std::string out;
        while (true) {
            if (at_end() || peek() == '\n') fail("unterminated string");
            char c = get();
            if (c == quote) return out;
            if (c == '\\' && quote == '"') {
                char e = get();
                switch (e) {
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    default: fail(std::string("unsupported escape \\") + e);
                }
            } else {
                out += c;
            }
        }
    }

    json value() {
        const char c = peek();
        if (c == '"' || c == '\'') return string_value();
        if (c == '[') {
            get();
            json arr = json::array();
            while (true) {
                skip_any_space();
                if (peek() == ']') {
                    get();
                    return arr;
                }
                arr.push_back(value());
                skip_any_space();
                if (peek() == ',') {
                    get();
                } else if (peek() != ']') {
                    fail("expected ',' or ']' in array");
                }
            }
        }
        std::string word;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || std::string("+-._").find(peek()) != std::string::npos))
            word += get();
        if (word == "true") return true;
        if (word == "false") return false;
        std::string digits;
        for (char d : word)
            if (d != '_') digits += d;
        if (digits.empty()) fail("expected a value");
        try {
            std::size_t used = 0;
            if (digits.find_first_of(".eE") == std::string::npos) {
                long long v = std::stoll(digits, &used);
                if (used == digits.size()) return v;
            } else {
                double v = std::stod(digits, &used);
                if (used == digits.size()) return v;
            }
        } catch (const std::logic_error&) {
        }
        fail("cannot read value '" + word + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

}  // namespace

nlohmann::ordered_json parse(const std::string& text) { return Reader(text).document(); }

}  // namespace minitoml
