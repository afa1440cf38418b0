#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "reqlens/text.hpp"

namespace reqlens {

// The four-way partition of a user input. Request/Context/Role are explicit
// spans; Expression is always the complement of the spans, never stored.
enum class Label { Request, Context, Role, Expression };

std::string label_tag(Label l); // "R", "C", "ROLE", "E"
Label label_from_tag(const std::string& tag);

struct Span {
    std::size_t start = 0; // inclusive, Unicode scalar values
    std::size_t end = 0;   // exclusive
    Label label = Label::Request;

    bool operator==(const Span&) const = default;
};

struct SegmentedUtterance {
    std::string record_id;
    std::string text;        // plain text, UTF-8
    std::vector<Span> spans; // sorted by start, pairwise disjoint, non-empty

    bool operator==(const SegmentedUtterance&) const = default;
};

// Throws Error("invariant", ...) if spans are unsorted, overlapping, empty,
// out of bounds, or carry the Expression label.
void validate_segmentation(const SegmentedUtterance& s);

// Inline markup codec used as the annotator wire format.
//
// Grammar: [[R]]...[[/R]], [[C]]...[[/C]], [[ROLE]]...[[/ROLE]]. Tags may not
// nest and spans may not be empty. A literal "[[" in the underlying text is
// escaped as "\[["; a backslash anywhere else stands for itself. Anything
// else that starts with "[[" is a grammar error. All errors carry the
// scalar-value offset of the offending character in the marked text.
SegmentedUtterance parse_markup(const std::string& marked_text,
                                const std::string& record_id = {});

// Inverse of parse_markup: parse_markup(emit_markup(s)) == s for every valid
// segmentation. Rejects invariant-violating input.
std::string emit_markup(const SegmentedUtterance& s);

// Tokenizes the plain text and labels each word by the span containing its
// first character; words outside every span are Expression.
std::vector<std::pair<std::string, Label>> word_labels(const SegmentedUtterance& s);

// JSON object {record_id, text, spans:[{start,end,label}]} with offsets in
// Unicode scalar values; label is one of "R"/"C"/"ROLE".
nlohmann::json segmentation_to_json(const SegmentedUtterance& s);
SegmentedUtterance segmentation_from_json(const nlohmann::json& j);

// Complement-of-spans text: the expression segments joined with a single
// space so removal of a span never glues two words together.
std::string expression_text(const SegmentedUtterance& s);

} // namespace reqlens
