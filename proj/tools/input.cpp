#include "input.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "iwmod/errors.hpp"

namespace iwmod::cli {

namespace {

bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
    return true;
}

bool is_bare_word(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || std::string("_:.+-^*").find(c) != std::string::npos))
            return false;
    return true;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int bracket_depth(const std::string& s) {
    int d = 0;
    bool quoted = false;
    for (char c : s) {
        if (c == '"') quoted = !quoted;
        if (quoted) continue;
        if (c == '[' || c == '{') ++d;
        if (c == ']' || c == '}') --d;
    }
    return d;
}

std::pair<int, int> offset_to_line_col(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::pair<int, int> Document::locate(const std::string& path) const {
    std::string p = path;
    for (;;) {
        auto it = where.find(p);
        if (it != where.end()) return it->second;
        auto cut = p.find_last_of(".[");
        if (cut == std::string::npos || cut == 0) break;
        p = p.substr(0, cut);
    }
    if (from_json) {
        // first occurrence of the innermost key
        std::string key = path.substr(path.find_last_of('.') == std::string::npos ? 0 : path.find_last_of('.') + 1);
        key = key.substr(0, key.find('['));
        auto pos = key.empty() ? std::string::npos : source.find("\"" + key + "\"");
        return offset_to_line_col(source, pos == std::string::npos ? 0 : pos);
    }
    return {0, 0};
}

void Document::fail(const std::string& path, const std::string& msg) const {
    auto [line, col] = locate(path);
    throw ParseError(line, col, (path.empty() ? "" : "'" + path + "': ") + msg);
}

Document parse_text(const std::string& text) {
    Document doc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    json* scope = &doc.root;
    std::string scope_path;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::string t = trim(line);
        if (t.empty()) continue;
        const int col0 = static_cast<int>(line.find_first_not_of(" \t")) + 1;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError(lineno, col0, "unterminated section header");
            std::string name = trim(t.substr(1, t.size() - 2));
            if (!is_ident(name)) throw ParseError(lineno, col0 + 1, "invalid section name '" + name + "'");
            json& arr = doc.root[name];
            if (arr.is_null()) arr = json::array();
            if (!arr.is_array()) throw ParseError(lineno, col0, "'" + name + "' is both a key and a section");
            scope_path = name + "[" + std::to_string(arr.size()) + "]";
            arr.push_back(json::object());
            scope = &arr.back();
            doc.where[scope_path] = {lineno, col0};
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, col0, "expected 'key = value' or '[section]'");
        std::string key = trim(line.substr(0, eq));
        if (!is_ident(key)) throw ParseError(lineno, col0, "invalid key '" + key + "'");
        std::string value = trim(line.substr(eq + 1));
        const auto vpos = line.find_first_not_of(" \t", eq + 1);
        const int vcol = static_cast<int>(vpos == std::string::npos ? eq + 1 : vpos) + 1;
        const int start_line = lineno;
        while (bracket_depth(value) > 0 && std::getline(in, raw)) {
            ++lineno;
            value += " " + trim(raw.substr(0, raw.find('#')));
        }
        if (value.empty()) throw ParseError(start_line, vcol, "missing value for '" + key + "'");
        if (bracket_depth(value) != 0) throw ParseError(start_line, vcol, "unbalanced brackets in value of '" + key + "'");
        if (scope->contains(key)) throw ParseError(start_line, col0, "duplicate key '" + key + "'");
        json parsed;
        const char c = value.front();
        if (c == '[' || c == '{' || c == '"' || c == '-' || std::isdigit(static_cast<unsigned char>(c)) ||
            value == "true" || value == "false") {
            try {
                parsed = json::parse(value);
            } catch (const json::parse_error& e) {
                throw ParseError(start_line, vcol + static_cast<int>(e.byte) - 1, "malformed value for '" + key + "'");
            }
        } else if (is_bare_word(value)) {
            parsed = value;
        } else {
            throw ParseError(start_line, vcol, "malformed value for '" + key + "'");
        }
        (*scope)[key] = parsed;
        doc.where[scope_path.empty() ? key : scope_path + "." + key] = {start_line, col0};
    }
    return doc;
}

Document parse_json(const std::string& text) {
    Document doc;
    doc.from_json = true;
    doc.source = text;
    try {
        doc.root = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, col, "malformed JSON");
    }
    if (!doc.root.is_object()) throw ParseError(1, 1, "top-level JSON value must be an object");
    return doc;
}

Document parse_document(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return parse_json(text);
    return parse_text(text);
}

Document load_document(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, 0, "cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_document(ss.str());
}

bool Node::has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

Node Node::at(const std::string& key) const {
    if (!j_->is_object()) fail("expected a group of keys");
    if (!j_->contains(key)) fail("missing required key '" + key + "'");
    return Node(*doc_, (*j_)[key], path_.empty() ? key : path_ + "." + key);
}

Node Node::operator[](std::size_t i) const {
    if (!j_->is_array() || i >= j_->size()) fail("expected a list with at least " + std::to_string(i + 1) + " entries");
    return Node(*doc_, (*j_)[i], path_ + "[" + std::to_string(i) + "]");
}

std::size_t Node::size() const {
    if (!j_->is_array()) fail("expected a list");
    return j_->size();
}

std::int64_t Node::as_int() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<std::int64_t>();
}

int Node::as_small_int() const {
    std::int64_t v = as_int();
    if (v < std::numeric_limits<int>::min() / 2 || v > std::numeric_limits<int>::max() / 2) fail("integer out of range");
    return static_cast<int>(v);
}

bool Node::as_bool() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
}

std::string Node::as_string() const {
    if (!j_->is_string()) fail("expected a word or string");
    return j_->get<std::string>();
}

std::vector<std::int64_t> Node::as_int_list() const {
    std::vector<std::int64_t> out;
    for (const auto& n : items()) out.push_back(n.as_int());
    return out;
}

std::vector<Node> Node::items() const {
    std::vector<Node> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
    return out;
}

std::vector<Node> Node::sections(const std::string& name) const {
    if (!has(name)) return {};
    Node arr = at(name);
    if (!arr.is_array()) arr.fail("expected one or more [" + name + "] blocks");
    std::vector<Node> out = arr.items();
    for (const auto& s : out)
        if (!s.raw().is_object()) s.fail("expected a [" + name + "] block");
    return out;
}

void check_keys(const Document& d, const std::set<std::string>& top,
                const std::map<std::string, std::set<std::string>>& sections) {
    for (const auto& [key, value] : d.root.items()) {
        auto sec = sections.find(key);
        if (sec == sections.end()) {
            if (!top.count(key)) d.fail(key, "unknown key");
            continue;
        }
        if (!value.is_array()) d.fail(key, "expected [" + key + "] blocks");
        for (std::size_t i = 0; i < value.size(); ++i) {
            const std::string base = key + "[" + std::to_string(i) + "]";
            if (!value[i].is_object()) d.fail(base, "expected a [" + key + "] block");
            for (const auto& [k2, v2] : value[i].items())
                if (!sec->second.count(k2)) d.fail(base + "." + k2, "unknown key");
        }
    }
}

}  // namespace iwmod::cli
