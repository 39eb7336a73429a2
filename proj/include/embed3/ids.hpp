#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace embed3 {

// Label for vertices, edges, faces and matroid ground elements.  A label is
// either an integer or a string; integers order before strings, integers by
// value, strings lexicographically.  This ordering fixes every "smallest id
// first" tie-break in the library.
class Id {
public:
  Id() : tag_(Tag::integer), num_(0) {}
  static Id of_int(long long n) {
    Id id;
    id.tag_ = Tag::integer;
    id.num_ = n;
    return id;
  }
  static Id of_string(std::string s) {
    Id id;
    id.tag_ = Tag::text;
    id.str_ = std::move(s);
    return id;
  }

  bool is_int() const { return tag_ == Tag::integer; }
  long long num() const {
    if (!is_int()) throw std::logic_error("Id::num on string id");
    return num_;
  }
  const std::string& str() const {
    if (is_int()) throw std::logic_error("Id::str on integer id");
    return str_;
  }

  std::string to_string() const {
    return is_int() ? std::to_string(num_) : str_;
  }

  // Fresh label derived from this one; always a string id.
  Id derived(const std::string& suffix) const {
    return of_string(to_string() + suffix);
  }

  friend bool operator==(const Id& a, const Id& b) {
    if (a.tag_ != b.tag_) return false;
    return a.is_int() ? a.num_ == b.num_ : a.str_ == b.str_;
  }
  friend std::strong_ordering operator<=>(const Id& a, const Id& b) {
    if (a.tag_ != b.tag_)
      return a.tag_ == Tag::integer ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
    if (a.is_int()) return a.num_ <=> b.num_;
    return a.str_ <=> b.str_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Id& id) {
    return os << id.to_string();
  }

private:
  enum class Tag : std::uint8_t { integer, text };
  Tag tag_;
  long long num_ = 0;
  std::string str_;
};

inline std::string join_ids(const std::vector<Id>& ids,
                            const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i].to_string();
  }
  return out;
}

}  // namespace embed3
