#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace iwmod::cli {

using json = nlohmann::ordered_json;

/// A parsed description file. Text and JSON inputs produce the same tree:
/// top-level keys map to values and every `[name]` block becomes one object
/// in the array `name`.
struct Document {
    json root = json::object();
    std::map<std::string, std::pair<int, int>> where;
    bool from_json = false;
    std::string source;

    std::pair<int, int> locate(const std::string& path) const;
    [[noreturn]] void fail(const std::string& path, const std::string& msg) const;
};

Document parse_text(const std::string& text);
Document parse_json(const std::string& text);
/// Dispatches on the first non-blank character.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

/// Typed, located view of a value inside a Document.
class Node {
public:
    Node(const Document& doc, const json& value, std::string path) : doc_(&doc), j_(&value), path_(std::move(path)) {}

    const std::string& path() const { return path_; }
    const json& raw() const { return *j_; }
    bool has(const std::string& key) const;
    Node at(const std::string& key) const;
    Node operator[](std::size_t i) const;
    std::size_t size() const;
    bool is_array() const { return j_->is_array(); }

    std::int64_t as_int() const;
    int as_small_int() const;
    bool as_bool() const;
    std::string as_string() const;
    std::vector<std::int64_t> as_int_list() const;
    std::vector<Node> items() const;

    /// Sections named `name`, empty when absent.
    std::vector<Node> sections(const std::string& name) const;

    [[noreturn]] void fail(const std::string& msg) const { doc_->fail(path_, msg); }

private:
    const Document* doc_;
    const json* j_;
    std::string path_;
};

inline Node root_node(const Document& d) { return Node(d, d.root, ""); }

/// Rejects keys outside `top` and, for each section name, outside its allowed set.
void check_keys(const Document& d, const std::set<std::string>& top,
                const std::map<std::string, std::set<std::string>>& sections = {});

}  // namespace iwmod::cli
