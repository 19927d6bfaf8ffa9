#pragma once
// CSV tuple formats for exported posts and comments, and the merge of both
// files into one chronologically sorted interaction stream.
//
// Exact schemas (first row header, comma separated, UTF-8):
//   posts:    PostId,UserId,CreationDate,Vote
//   comments: CommentId,UserId,CreationDate,PostId,Vote,ParentId

#include "dibrm/model.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace dibrm {

struct PostRecord {
    std::int64_t post_id = 0;
    std::int64_t user_id = 0;
    UtcSeconds creation_date = 0;
    std::int64_t vote = 0;

    friend bool operator==(const PostRecord&, const PostRecord&) = default;
};

struct CommentRecord {
    std::int64_t comment_id = 0;
    std::int64_t user_id = 0;
    UtcSeconds creation_date = 0;
    std::int64_t post_id = 0;
    std::int64_t vote = 0;
    std::int64_t parent_id = 0;

    friend bool operator==(const CommentRecord&, const CommentRecord&) = default;
};

struct RowError {
    std::size_t line = 0;  // 1-based; the header is line 1
    std::string message;
};

// Malformed rows are collected, not thrown; the caller decides whether to
// abort (default) or drop them (--skip-bad-rows).
template <typename Record>
struct ParseResult {
    std::vector<Record> records;
    std::vector<RowError> errors;
};

// Header names are matched case-insensitively; a wrong header throws
// ValidationError. A header-only file parses to an empty list.
ParseResult<PostRecord> parse_posts(std::istream& in);
ParseResult<CommentRecord> parse_comments(std::istream& in);

// File variants throw IoError when the file cannot be opened.
ParseResult<PostRecord> parse_posts_file(const std::string& path);
ParseResult<CommentRecord> parse_comments_file(const std::string& path);

// Dates are normalized to UTC ISO-8601; parse/write round-trips exactly.
void write_posts(std::ostream& out, const std::vector<PostRecord>& posts);
void write_comments(std::ostream& out, const std::vector<CommentRecord>& comments);

// One event per record, kind "post"/"comment", event ids namespaced
// "p<id>"/"c<id>", sorted by (timestamp, event_id).
std::vector<InteractionEvent> merge_streams(const std::vector<PostRecord>& posts,
                                            const std::vector<CommentRecord>& comments);

}  // namespace dibrm
