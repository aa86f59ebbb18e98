#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "enrichcat/fincat.hpp"
#include "enrichcat/fpmat.hpp"
#include "enrichcat/verdict.hpp"

namespace enrichcat {

class Base;
using BasePtr = std::shared_ptr<const Base>;

// Object carriers. Every base uses canonical carriers {0..n-1}; tensor
// products flatten row-major, which makes the monoidal structure strict.
struct SetCarrier {
  int size = 0;
  bool operator==(const SetCarrier&) const = default;
};

struct GSetCarrier {
  int size = 0;
  std::vector<std::vector<int>> act; // act[g][x], g indexing the group elements
  bool operator==(const GSetCarrier&) const = default;
};

struct VecCarrier {
  int dim = 0;
  bool operator==(const VecCarrier&) const = default;
};

using ObjData = std::variant<SetCarrier, GSetCarrier, FinCategory, VecCarrier>;

struct BaseObject {
  BasePtr base;
  ObjData data;
  bool operator==(const BaseObject& o) const;
};

struct FuncData {
  std::vector<int> map;
  bool operator==(const FuncData&) const = default;
};

struct FunctorData {
  std::vector<int> obj_map;
  std::vector<int> arr_map;
  bool operator==(const FunctorData&) const = default;
};

using MorData = std::variant<FuncData, FunctorData, FpMat>;

struct BaseMorphism {
  BasePtr base;
  BaseObject src;
  BaseObject dst;
  MorData data;
  bool operator==(const BaseMorphism& o) const;
};

// Functor from a finite shape category into the base.
struct BaseDiagram {
  FinCategory shape;
  std::vector<BaseObject> ob;
  std::vector<BaseMorphism> ar;
};

// Empty string when the diagram is a well-formed functor.
std::string validate_diagram(const BaseDiagram& d);

// Presentations let callers induce morphisms out of colimits / into limits.
struct SetColimPres {
  std::vector<int> offset;   // block start per shape object, plus total
  std::vector<int> class_of; // disjoint-union element -> apex element
  std::vector<int> rep;      // apex element -> disjoint-union element
};
struct VecColimPres {
  FpMat q; // sum -> apex
  FpMat s; // section, q s = id
};
struct CatColimPres {
  std::vector<std::pair<int, int>> obj_rep;                    // apex object -> (block, object)
  std::vector<std::vector<std::pair<int, int>>> arr_word;      // apex arrow -> generator word
  std::vector<int> word_src;                                   // apex object of each word's source
};
using ColimPres = std::variant<SetColimPres, VecColimPres, CatColimPres>;

struct ColimResult {
  BaseObject apex;
  std::vector<BaseMorphism> injections;
  std::shared_ptr<const ColimPres> pres;
};

struct SetLimPres {
  std::vector<std::vector<int>> tuples; // apex element -> one element per shape object
};
struct CatLimPres {
  std::vector<std::vector<int>> obj_tuples;
  std::vector<std::vector<int>> arr_tuples;
};
struct VecLimPres {
  FpMat incl; // apex -> sum
};
using LimPres = std::variant<SetLimPres, CatLimPres, VecLimPres>;

struct LimitResult {
  BaseObject apex;
  std::vector<BaseMorphism> projections;
  std::shared_ptr<const LimPres> pres;
};

// Mediating morphism out of a colimit for a compatible cocone, and dually.
// Throws std::invalid_argument when the legs are not a (co)cone.
BaseMorphism induce_colimit(const ColimResult& c, const std::vector<BaseMorphism>& legs);
BaseMorphism induce_limit(const LimitResult& l, const std::vector<BaseMorphism>& legs);

struct Splitting {
  BaseObject object;
  BaseMorphism incl; // object -> ambient
  BaseMorphism proj; // ambient -> object, incl . proj = idempotent, proj . incl = id
};

class Base : public std::enable_shared_from_this<Base> {
 public:
  enum class Tag { FinSet, FinGSet, FinCat, FinVec };

  explicit Base(Tag t) : tag_(t) {}
  virtual ~Base() = default;

  Tag tag() const { return tag_; }
  bool cartesian() const { return tag_ != Tag::FinVec; }
  bool has_direct_sums() const { return tag_ == Tag::FinVec; }
  bool unit_hom_weakly_cocontinuous() const { return true; }
  bool locally_dualizable() const { return tag_ == Tag::FinVec; }

  virtual std::string name() const = 0;
  virtual Json descriptor() const = 0;

  virtual BaseObject unit() const = 0;
  virtual std::vector<BaseObject> generator() const = 0;

  virtual void validate_object(const BaseObject& x) const = 0;
  virtual void validate_morphism(const BaseMorphism& f) const = 0;

  virtual BaseObject tensor(const BaseObject& x, const BaseObject& y) const = 0;
  virtual BaseMorphism tensor_mor(const BaseMorphism& f, const BaseMorphism& g) const = 0;
  virtual BaseObject hom(const BaseObject& x, const BaseObject& y) const = 0;
  virtual std::vector<BaseMorphism> hom_set(const BaseObject& x, const BaseObject& y,
                                            const Bounds& b = {}) const = 0;
  virtual BaseMorphism identity(const BaseObject& x) const = 0;
  virtual BaseMorphism compose(const BaseMorphism& g, const BaseMorphism& f) const = 0;
  virtual BaseMorphism braiding(const BaseObject& x, const BaseObject& y) const = 0;

  // f : X (x) Y -> Z  |->  X -> [Y,Z]
  virtual BaseMorphism transpose(const BaseMorphism& f, const BaseObject& x,
                                 const BaseObject& y) const = 0;
  // g : X -> [Y,Z]  |->  X (x) Y -> Z
  virtual BaseMorphism untranspose(const BaseMorphism& g, const BaseObject& y,
                                   const BaseObject& z) const = 0;

  virtual LimitResult finite_limit(const BaseDiagram& d) const = 0;
  virtual ColimResult finite_colimit(const BaseDiagram& d, const Bounds& b = {}) const = 0;

  virtual Splitting split_idempotent(const BaseMorphism& e) const = 0;

  virtual bool is_iso(const BaseMorphism& f) const = 0;
  virtual BaseMorphism invert(const BaseMorphism& f) const = 0;

  // Terminal map for cartesian bases (the unit is terminal there).
  BaseMorphism to_terminal(const BaseObject& x) const;
  // Cartesian pairing <f,g> : X -> A (x) B for f : X -> A, g : X -> B.
  BaseMorphism pair(const BaseMorphism& f, const BaseMorphism& g) const;

  // Empty carrier and the unique map out of it.
  BaseObject initial() const;
  BaseMorphism from_initial(const BaseObject& x) const;

  Verdict is_dualizable(const BaseObject& x, const Bounds& b = {}) const;

  // Convenience wrappers over finite_(co)limit.
  BaseObject terminal() const;
  ColimResult coproduct(const std::vector<BaseObject>& xs) const;
  LimitResult product(const std::vector<BaseObject>& xs) const;
  ColimResult coequalizer(const BaseMorphism& f, const BaseMorphism& g, const Bounds& b = {}) const;
  LimitResult equalizer(const BaseMorphism& f, const BaseMorphism& g) const;

  // Global elements, i.e. hom_set(unit, x).
  std::vector<BaseMorphism> points(const BaseObject& x, const Bounds& b = {}) const;

 private:
  Tag tag_;
};

BasePtr finset_base();

struct Group {
  std::vector<std::vector<int>> mult; // mult[g][h], identity must be index 0
  int size() const { return static_cast<int>(mult.size()); }
  int inverse(int g) const;
};
std::string validate_group(const Group& g);
Group cyclic_group(int n);
Group symmetric_group_3();

BasePtr fingset_base(Group g);
BasePtr fincat_base();
BasePtr finvec_base(int p);
const Group& group_of(const Base& b); // FinGSet only
int prime_of(const Base& b);          // FinVec only

bool same_base(const Base& a, const Base& b);
BasePtr base_from_json(const Json& j);

Json obj_to_json(const BaseObject& x);
BaseObject obj_from_json(const BasePtr& b, const Json& j);
Json mor_to_json(const BaseMorphism& f);
BaseMorphism mor_from_json(const BasePtr& b, const Json& j);

int carrier_size(const BaseObject& x);

// Apply a cartesian-style morphism to an element index (FinSet/FinGSet only).
int apply_func(const BaseMorphism& f, int x);

}  // namespace enrichcat
