// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <iosfwd>
#include <string>

#include "authorid/corpus.hpp"

namespace authorid {

// Element/attribute mapping for NUS-style SMS corpus XML. The corpus format
// has changed across releases, so nothing is hard-coded: every name below can
// be overridden (CLI: --xml-* flags).
struct XmlSchema {
    // Element that represents one message.
    std::string message_element = "message";
    // Attribute on the message element carrying the author id. Messages
    // without it are skipped.
    std::string author_attr = "author";
    // Attribute distinguishing text messages from multimedia/contact-card
    // entries. A message is kept when the attribute is missing or equals
    // text_type_value. Set type_attr to "" to disable the check.
    std::string type_attr = "type";
    std::string text_type_value = "text";
    // Slash-separated element path, below the message element, whose
    // character data is the message body ("" = character data of the message
    // element itself). Leading/trailing whitespace is trimmed; messages with
    // an empty body are skipped.
    std::string body_path = "text";
};

// Streams the XML document and returns one record per accepted message
// element, ids in document order. Malformed XML raises ParseError with the
// expat line/column; a document with zero accepted messages raises
// EmptyCorpusError.
Corpus parse_nus_xml(std::istream& in, const XmlSchema& schema = {});

}  // namespace authorid
