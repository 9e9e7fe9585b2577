#include "xfam/family.hpp"

#include <algorithm>
#include <sstream>

namespace xfam {

namespace {

void validate_member(Mask a, int ground_size, int k, bool uniform) {
  if (!is_subset_of(a, full_mask(ground_size)))
    throw std::invalid_argument("member has bits outside the ground set");
  const int pc = set_size(a);
  if (uniform ? pc != k : pc > k)
    throw std::invalid_argument("member has popcount " + std::to_string(pc) +
                                ", expected " + (uniform ? "" : "<= ") + std::to_string(k));
}

}  // namespace

UniformFamily UniformFamily::create(int ground_size, int k, std::vector<Mask> members) {
  if (ground_size < 1 || ground_size > kMaxGround)
    throw std::invalid_argument("ground size must be in [1, 64]");
  if (k < 0 || k > ground_size)
    throw std::invalid_argument("uniform size must be in [0, ground size]");
  for (Mask a : members) validate_member(a, ground_size, k, /*uniform=*/true);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return UniformFamily{ground_size, k, std::move(members)};
}

bool UniformFamily::contains(Mask a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

FamilyPair FamilyPair::create(UniformFamily a, UniformFamily b, int t) {
  if (t < 1) throw std::invalid_argument("intersection threshold must be >= 1");
  if (t > a.k || t > b.k)
    throw std::invalid_argument("threshold exceeds a uniform size");
  return FamilyPair{std::move(a), std::move(b), t};
}

bool is_t_intersecting(const UniformFamily& f, int t) {
  if (f.empty()) throw std::domain_error("t-intersection is undefined for an empty family");
  if (f.k < t) return false;  // the diagonal pair already fails
  const auto& ms = f.members;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (intersection_size(ms[i], ms[j]) < t) return false;
  return true;
}

bool is_cross_t_intersecting(const UniformFamily& a, const UniformFamily& b, int t) {
  if (a.empty() || b.empty())
    throw std::domain_error("cross-t-intersection is undefined for an empty family");
  for (Mask x : a.members)
    for (Mask y : b.members)
      if (intersection_size(x, y) < t) return false;
  return true;
}

bool is_cross_t_intersecting(const FamilyPair& p) {
  return is_cross_t_intersecting(p.a, p.b, p.t);
}

std::string render_family_file(int ground_size, int k, const std::vector<Mask>& members) {
  std::ostringstream os;
  os << ground_size << ' ' << k << '\n';
  os << std::hex;
  for (Mask a : members) os << a << '\n';
  return os.str();
}

std::string to_family_text(const UniformFamily& f) {
  return render_family_file(f.ground_size, f.k, f.members);
}

FamilyFileData parse_family_file(const std::string& text, bool uniform) {
  if (text.empty() || text.back() != '\n')
    throw std::invalid_argument("family file must end with a newline");

  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("missing header line");

  FamilyFileData data;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> data.ground_size >> data.k) || hs >> extra)
      throw std::invalid_argument("header must be exactly \"n k\"");
  }
  if (data.ground_size < 1 || data.ground_size > kMaxGround)
    throw std::invalid_argument("ground size must be in [1, 64]");
  if (data.k < 0 || data.k > data.ground_size)
    throw std::invalid_argument("uniform size must be in [0, ground size]");

  while (std::getline(is, line)) {
    if (line.empty()) throw std::invalid_argument("blank member line");
    Mask a = 0;
    for (char c : line) {
      int digit;
      if (c >= '0' && c <= '9')
        digit = c - '0';
      else if (c >= 'a' && c <= 'f')
        digit = c - 'a' + 10;
      else
        throw std::invalid_argument("member lines must be lowercase hex");
      if (a >> 60) throw std::invalid_argument("member does not fit in 64 bits");
      a = (a << 4) | static_cast<Mask>(digit);
    }
    validate_member(a, data.ground_size, data.k, uniform);
    data.members.push_back(a);
  }
  std::sort(data.members.begin(), data.members.end());
  data.members.erase(std::unique(data.members.begin(), data.members.end()), data.members.end());
  return data;
}

UniformFamily family_from_text(const std::string& text) {
  FamilyFileData d = parse_family_file(text, /*uniform=*/true);
  return UniformFamily::create(d.ground_size, d.k, std::move(d.members));
}

}  // namespace xfam
