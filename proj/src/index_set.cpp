#include "tdn/index_set.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tdn {

std::vector<int> labels(IndexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

IndexSet from_labels(const std::vector<int>& ls) {
  IndexSet s = 0;
  for (int i : ls) {
    if (i < 1 || i > kMaxLabels) throw std::out_of_range("mark label out of range: " + std::to_string(i));
    s |= singleton(i);
  }
  return s;
}

std::string set_key(IndexSet s) {
  std::string out = "[";
  bool first = true;
  for (int i : labels(s)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "]";
}

IndexSet parse_set(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '[' && c != ']' && c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c)))
      body += c;
  if (body.empty()) throw std::invalid_argument("empty index set");
  std::vector<int> ls;
  if (body.find(',') == std::string::npos && body.size() > 1) {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad index set: " + text);
      ls.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      std::string tok = body.substr(start, comma - start);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad index set: " + text);
      ls.push_back(std::stoi(tok));
      start = comma + 1;
    }
  }
  return from_labels(ls);
}

bool lex_less(IndexSet a, IndexSet b) {
  auto la = labels(a), lb = labels(b);
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

}  // namespace tdn
