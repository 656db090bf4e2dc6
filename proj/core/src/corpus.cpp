#include "grmod/corpus.hpp"

namespace grmod {

const std::string& builtin_corpus_text() {
    static const std::string text = R"(# verification corpus: small graded ideals at characteristic 32003
ring: char=32003, vars=[x,y,z]
ideal residue_field:
  x
  y
  z
ideal polynomial_ring:
ideal ci_three_squares:
  x^2
  y^2
  z^2
ideal gorenstein_codim3:
  x*y
  x*z
  y*z
  x^2 - y^2
  x^2 - z^2
ideal minors_3x2:
  x*z - y^2
  x^2 - y*z
  x*y - z^2
ideal nonequidimensional:
  x*y
  x*z

ring: char=32003, vars=[x,y]
ideal ci_x2_y3:
  x^2
  y^3
ideal artinian_fat_point:
  x^2
  x*y
  y^2

ring: char=32003, vars=[x,y,z,w]
ideal plane_square:
  x^2
  x*y
  y^2
ideal twisted_cubic:
  x*z - y^2
  y*w - z^2
  x*w - y*z
ideal rational_quartic [genus0]:
  x*w - y*z
  x^2*z - y^3
  x*z^2 - y^2*w
  y*w^2 - z^3

ring: char=32003, vars=[a,b,c,d,e]
ideal rational_normal_quartic [genus0]:
  a*c - b^2
  a*d - b*c
  a*e - b*d
  b*d - c^2
  b*e - c*d
  c*e - d^2
)";
    return text;
}

std::vector<CorpusEntry> corpus_from_document(const InputDocument& doc) {
    std::vector<CorpusEntry> out;
    for (const InputSection& s : doc.sections)
        for (const InputIdeal& i : s.ideals) {
            bool genus0 = false;
            for (const std::string& t : i.tags)
                if (t == "genus0")
                    genus0 = true;
            out.push_back(CorpusEntry{i.name, s.ring, i.gens, genus0});
        }
    return out;
}

std::vector<CorpusEntry> builtin_corpus() {
    return corpus_from_document(parse_input(builtin_corpus_text()));
}

}  // namespace grmod
