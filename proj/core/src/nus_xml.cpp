// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "authorid/nus_xml.hpp"

#include <expat.h>

#include <cstring>
#include <istream>
#include <vector>

#include "authorid/errors.hpp"

namespace authorid {
namespace {

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> segments;
    std::string cur;
    for (const char c : path) {
        if (c == '/') {
            if (!cur.empty()) segments.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) segments.push_back(std::move(cur));
    return segments;
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (b < e && ws(s[b])) ++b;
    while (e > b && ws(s[e - 1])) --e;
    return s.substr(b, e - b);
}

struct ParseState {
    const XmlSchema* schema = nullptr;
    std::vector<std::string> body_segments;
    std::vector<SmsRecord> records;

    bool in_message = false;
    unsigned depth = 0;
    unsigned message_depth = 0;
    std::vector<std::string> rel_path;  // element path below the message element
    std::string author;
    bool type_ok = false;
    std::string body;

    // True while character data belongs to the body: either the body element
    // (or a descendant of it) is open, or body_path is empty and we are
    // directly inside the message element.
    bool capturing() const {
        if (!in_message) return false;
        if (body_segments.empty()) return rel_path.empty();
        if (rel_path.size() < body_segments.size()) return false;
        return std::equal(body_segments.begin(), body_segments.end(), rel_path.begin());
    }
};

const char* attribute_value(const XML_Char** atts, const std::string& name) {
    for (std::size_t i = 0; atts[i]; i += 2) {
        if (name == atts[i]) return atts[i + 1];
    }
    return nullptr;
}

void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** atts) {
    auto& st = *static_cast<ParseState*>(user);
    ++st.depth;
    if (!st.in_message) {
        if (st.schema->message_element == name) {
            st.in_message = true;
            st.message_depth = st.depth;
            st.rel_path.clear();
            st.body.clear();
            const char* author = attribute_value(atts, st.schema->author_attr);
            st.author = author ? author : "";
            st.type_ok = true;
            if (!st.schema->type_attr.empty()) {
                const char* type = attribute_value(atts, st.schema->type_attr);
                if (type && st.schema->text_type_value != type) st.type_ok = false;
            }
        }
        return;
    }
    st.rel_path.emplace_back(name);
}

void XMLCALL on_end(void* user, const XML_Char* /*name*/) {
    auto& st = *static_cast<ParseState*>(user);
    if (st.in_message) {
        if (st.depth == st.message_depth) {
            if (st.type_ok && !st.author.empty()) {
                std::string text = trimmed(st.body);
                if (!text.empty()) {
                    st.records.push_back({static_cast<std::uint64_t>(st.records.size()),
                                          st.author, std::move(text), Source::nus_xml});
                }
            }
            st.in_message = false;
        } else {
            st.rel_path.pop_back();
        }
    }
    --st.depth;
}

void XMLCALL on_chardata(void* user, const XML_Char* data, int len) {
    auto& st = *static_cast<ParseState*>(user);
    if (st.capturing()) st.body.append(data, static_cast<std::size_t>(len));
}

struct ExpatParser {
    XML_Parser handle;
    ExpatParser() : handle(XML_ParserCreate(nullptr)) {}
    ~ExpatParser() { XML_ParserFree(handle); }
    ExpatParser(const ExpatParser&) = delete;
    ExpatParser& operator=(const ExpatParser&) = delete;
};

}  // namespace

Corpus parse_nus_xml(std::istream& in, const XmlSchema& schema) {
    ParseState state;
    state.schema = &schema;
    state.body_segments = split_path(schema.body_path);

    ExpatParser parser;
    XML_SetUserData(parser.handle, &state);
    XML_SetElementHandler(parser.handle, on_start, on_end);
    XML_SetCharacterDataHandler(parser.handle, on_chardata);

    char buffer[1 << 16];
    bool done = false;
    while (!done) {
        in.read(buffer, sizeof(buffer));
        const auto n = static_cast<std::size_t>(in.gcount());
        done = n < sizeof(buffer);
        if (XML_Parse(parser.handle, buffer, static_cast<int>(n), done) == XML_STATUS_ERROR) {
            const auto line = static_cast<std::size_t>(XML_GetCurrentLineNumber(parser.handle));
            const auto column = static_cast<std::size_t>(XML_GetCurrentColumnNumber(parser.handle));
            throw ParseError("XML parse error at line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " +
                                 XML_ErrorString(XML_GetErrorCode(parser.handle)),
                             line, column);
        }
    }
    if (state.records.empty()) {
        throw EmptyCorpusError("no messages extracted (message element '" +
                               schema.message_element + "')");
    }
    return Corpus(std::move(state.records));
}

}  // namespace authorid
