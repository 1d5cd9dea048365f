#include "covext/monodromy.hpp"

#include "covext/errors.hpp"

namespace covext {

MonodromyRep::MonodromyRep(Presentation presentation, std::vector<Permutation> images)
    : presentation_(std::move(presentation)), images_(std::move(images)) {
  if (images_.size() != presentation_.alphabet.size())
    throw InvalidRep("representation needs one image per generator (" +
                     std::to_string(presentation_.alphabet.size()) + " expected, " +
                     std::to_string(images_.size()) + " given)");
  if (images_.empty()) {
    degree_ = 1;
  } else {
    degree_ = images_.front().degree();
    for (const auto& p : images_)
      if (p.degree() != degree_) throw InvalidRep("generator images have different degrees");
  }
  if (degree_ == 0) throw InvalidRep("representation degree must be at least 1");
  for (const Word& r : presentation_.relators) {
    if (!evaluate(r).is_identity())
      throw InvalidRep("relator '" + to_string(r) + "' does not act trivially");
  }
}

MonodromyRep MonodromyRep::trivial(const Presentation& presentation) {
  return MonodromyRep(presentation,
                      std::vector<Permutation>(presentation.alphabet.size(), Permutation::identity(1)));
}

Permutation MonodromyRep::evaluate(const Word& w) const {
  if (!(w.alphabet() == alphabet()))
    throw AlphabetError("evaluate: word is not over the representation's alphabet");
  std::vector<std::uint32_t> pts(degree_);
  for (std::uint32_t s = 0; s < degree_; ++s) pts[s] = s;
  for (const Letter& l : w.letters()) {
    const Permutation& g = images_[l.gen];
    if (l.sign > 0) {
      for (auto& x : pts) x = g(x);
    } else {
      const Permutation inv = g.inverse();
      for (auto& x : pts) x = inv(x);
    }
  }
  return Permutation(std::move(pts));
}

bool MonodromyRep::is_transitive() const { return covext::is_transitive(images_, degree_); }

bool lift_is_closed(const MonodromyRep& rep, const Word& w, std::uint32_t sheet) {
  if (sheet >= rep.degree())
    throw InvalidRep("sheet " + std::to_string(sheet) + " out of range for degree " +
                     std::to_string(rep.degree()));
  return rep.evaluate(w)(sheet) == sheet;
}

}  // namespace covext
