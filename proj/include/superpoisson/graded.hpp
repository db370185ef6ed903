#pragma once

// Z/2-graded vector spaces, homogeneous maps, tensors and the Koszul sign
// bookkeeping shared by every other header.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace superpoisson {

struct BasisElement {
    std::string name;
    Parity parity = Parity::even;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Ordered homogeneous basis. Cheap to copy; the basis list is shared and
/// never mutated after construction.
class GradedSpace {
  public:
    GradedSpace() : data_(std::make_shared<const std::vector<BasisElement>>()) {}

    explicit GradedSpace(std::vector<BasisElement> basis) {
        std::set<std::string> seen;
        for (const auto& b : basis) {
            if (b.name.empty())
                throw Error("basis element with empty name");
            if (!seen.insert(b.name).second)
                throw Error("duplicate basis name '" + b.name + "'");
        }
        if (basis.empty())
            throw Error("graded space must have at least one basis element");
        data_ = std::make_shared<const std::vector<BasisElement>>(std::move(basis));
    }

    std::size_t dim() const noexcept { return data_->size(); }
    const std::vector<BasisElement>& basis() const noexcept { return *data_; }
    const BasisElement& operator[](std::size_t i) const { return (*data_)[i]; }
    Parity parity(std::size_t i) const { return (*data_)[i].parity; }
    const std::string& name(std::size_t i) const { return (*data_)[i].name; }

    std::size_t even_dim() const {
        return static_cast<std::size_t>(std::count_if(data_->begin(), data_->end(),
                                                      [](const auto& b) { return b.parity == Parity::even; }));
    }
    std::size_t odd_dim() const { return dim() - even_dim(); }

    /// Index of the basis element called `name`; throws if absent.
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < dim(); ++i)
            if ((*data_)[i].name == name)
                return i;
        throw Error("unknown basis element '" + name + "'");
    }

    std::vector<Parity> parities() const {
        std::vector<Parity> p;
        p.reserve(dim());
        for (const auto& b : *data_)
            p.push_back(b.parity);
        return p;
    }

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
        return a.data_ == b.data_ || *a.data_ == *b.data_;
    }

  private:
    std::shared_ptr<const std::vector<BasisElement>> data_;
};

inline GradedSpace make_space(std::initializer_list<std::pair<const char*, Parity>> elems) {
    std::vector<BasisElement> b;
    for (const auto& [n, p] : elems)
        b.push_back({n, p});
    return GradedSpace(std::move(b));
}

/// V* with names starred; |v_i*| = |v_i|.
inline GradedSpace dual_space(const GradedSpace& v) {
    std::vector<BasisElement> b;
    for (const auto& e : v.basis())
        b.push_back({e.name + "*", e.parity});
    return GradedSpace(std::move(b));
}

/// sV: same order, names prefixed with "s", every parity flipped.
inline GradedSpace parity_shift(const GradedSpace& v) {
    std::vector<BasisElement> b;
    for (const auto& e : v.basis())
        b.push_back({"s" + e.name, e.parity + Parity::odd});
    return GradedSpace(std::move(b));
}

/// P ⊕ V with the basis of P first. Names of V that clash with a name
/// already present get primes appended until they are unique.
inline GradedSpace direct_sum(const GradedSpace& a, const GradedSpace& b) {
    std::vector<BasisElement> out = a.basis();
    std::set<std::string> used;
    for (const auto& e : out)
        used.insert(e.name);
    for (auto e : b.basis()) {
        while (used.count(e.name))
            e.name += "'";
        used.insert(e.name);
        out.push_back(std::move(e));
    }
    return GradedSpace(std::move(out));
}

struct Vector {
    GradedSpace space;
    Coefficients coefficients;

    Vector() = default;
    Vector(GradedSpace s, Coefficients c) : space(std::move(s)), coefficients(std::move(c)) {
        if (coefficients.size() != space.dim())
            throw SpaceMismatch("vector length does not match space dimension");
    }

    static Vector zero(const GradedSpace& s) { return {s, Coefficients(s.dim())}; }
    static Vector basis(const GradedSpace& s, std::size_t i) {
        Vector v = zero(s);
        v.coefficients.at(i) = 1;
        return v;
    }

    bool is_zero() const {
        return std::all_of(coefficients.begin(), coefficients.end(), [](const Scalar& s) { return s == 0; });
    }

    friend bool operator==(const Vector&, const Vector&) = default;
};

inline bool coefficients_zero(const Coefficients& c) {
    return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s == 0; });
}

/// ⟨α, v⟩ for α on V* and v on V, with ⟨v_i*, v_j⟩ = δ_ij.
inline Scalar pair(const Vector& alpha, const Vector& v) {
    if (!(alpha.space == dual_space(v.space)))
        throw SpaceMismatch("pairing requires a covector on the dual of the vector's space");
    Scalar s = 0;
    for (std::size_t i = 0; i < v.coefficients.size(); ++i)
        s += alpha.coefficients[i] * v.coefficients[i];
    return s;
}

/// Homogeneous linear map. Entry (i, j) is the coefficient of codomain
/// basis i in the image of domain basis j; it may be nonzero only when
/// |codomain_i| = |domain_j| + parity.
class LinearMap {
  public:
    LinearMap(GradedSpace domain, GradedSpace codomain, Parity parity, Matrix matrix)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), parity_(parity), matrix_(std::move(matrix)) {
        if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
            throw SpaceMismatch("matrix shape does not match domain/codomain dimensions");
        for (std::size_t i = 0; i < matrix_.rows(); ++i)
            for (std::size_t j = 0; j < matrix_.cols(); ++j)
                if (matrix_(i, j) != 0 && codomain_.parity(i) != domain_.parity(j) + parity_)
                    throw Error("map of parity " + to_string(parity_) + " is not homogeneous at entry (" +
                                codomain_.name(i) + ", " + domain_.name(j) + ")");
    }

    static LinearMap zero(GradedSpace domain, GradedSpace codomain, Parity parity) {
        Matrix m(codomain.dim(), domain.dim());
        return {std::move(domain), std::move(codomain), parity, std::move(m)};
    }

    static LinearMap identity(const GradedSpace& s) { return {s, s, Parity::even, Matrix::identity(s.dim())}; }

    const GradedSpace& domain() const noexcept { return domain_; }
    const GradedSpace& codomain() const noexcept { return codomain_; }
    Parity parity() const noexcept { return parity_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    Vector operator()(const Vector& v) const {
        if (!(v.space == domain_))
            throw SpaceMismatch("vector does not live on the map's domain");
        return {codomain_, matrix_ * std::span<const Scalar>(v.coefficients)};
    }

    Coefficients image_of_basis(std::size_t j) const { return matrix_.column(j); }

    /// Same matrix viewed on other (equal-dimensional) spaces; parity is
    /// recomputed by the caller.
    LinearMap reinterpret(GradedSpace domain, GradedSpace codomain, Parity parity) const {
        return {std::move(domain), std::move(codomain), parity, matrix_};
    }

    friend LinearMap compose(const LinearMap& f, const LinearMap& g) {
        if (!(g.codomain_ == f.domain_))
            throw SpaceMismatch("composition: codomain of right factor differs from domain of left factor");
        return {g.domain_, f.codomain_, f.parity_ + g.parity_, f.matrix_ * g.matrix_};
    }

    friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
        a.check_compatible(b);
        return {a.domain_, a.codomain_, a.parity_, a.matrix_ + b.matrix_};
    }

    friend LinearMap operator*(const Scalar& s, const LinearMap& a) {
        return {a.domain_, a.codomain_, a.parity_, s * a.matrix_};
    }

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.parity_ == b.parity_ &&
               a.matrix_ == b.matrix_;
    }

  private:
    void check_compatible(const LinearMap& b) const {
        if (!(domain_ == b.domain_) || !(codomain_ == b.codomain_) || parity_ != b.parity_)
            throw SpaceMismatch("maps differ in domain, codomain or parity");
    }

    GradedSpace domain_;
    GradedSpace codomain_;
    Parity parity_;
    Matrix matrix_;
};

/// r = Σ t^{ij} e_i ⊗ e_j, homogeneous of the declared parity.
class TensorElement {
  public:
    TensorElement(GradedSpace space, Parity parity)
        : space_(std::move(space)), parity_(parity), coeffs_(space_.dim(), space_.dim()) {}

    TensorElement(GradedSpace space, Parity parity, Matrix coefficients)
        : space_(std::move(space)), parity_(parity), coeffs_(std::move(coefficients)) {
        if (coeffs_.rows() != space_.dim() || coeffs_.cols() != space_.dim())
            throw SpaceMismatch("tensor coefficient matrix does not match the space");
        for (std::size_t i = 0; i < space_.dim(); ++i)
            for (std::size_t j = 0; j < space_.dim(); ++j)
                check_entry(i, j, coeffs_(i, j));
    }

    const GradedSpace& space() const noexcept { return space_; }
    Parity parity() const noexcept { return parity_; }
    const Matrix& coefficients() const noexcept { return coeffs_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return coeffs_(i, j); }

    void add(std::size_t i, std::size_t j, const Scalar& c) {
        check_entry(i, j, c);
        coeffs_(i, j) += c;
    }

    /// Adds c·(left ⊗ right) by basis names.
    TensorElement& add(const std::string& left, const std::string& right, const Scalar& c) {
        add(space_.index_of(left), space_.index_of(right), c);
        return *this;
    }

    bool is_zero() const { return coeffs_.is_zero(); }

    friend TensorElement operator*(const Scalar& s, TensorElement t) {
        t.coeffs_ *= s;
        return t;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.space_ == b.space_ && a.coeffs_ == b.coeffs_ && (a.parity_ == b.parity_ || a.is_zero());
    }

  private:
    void check_entry(std::size_t i, std::size_t j, const Scalar& c) const {
        if (c != 0 && space_.parity(i) + space_.parity(j) != parity_)
            throw Error("tensor of parity " + to_string(parity_) + " has a term of the other parity at (" +
                        space_.name(i) + ", " + space_.name(j) + ")");
    }

    GradedSpace space_;
    Parity parity_;
    Matrix coeffs_;
};

/// Dense cube Σ t^{ijk} e_i ⊗ e_j ⊗ e_k.
class TripleTensor {
  public:
    explicit TripleTensor(GradedSpace space) : space_(std::move(space)), n_(space_.dim()), data_(n_ * n_ * n_) {}

    const GradedSpace& space() const noexcept { return space_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * n_ + j) * n_ + k];
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
    }

    std::size_t nonzero_count() const {
        return static_cast<std::size_t>(
            std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return s != 0; }));
    }

    TripleTensor& operator+=(const TripleTensor& o) {
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }

    friend bool operator==(const TripleTensor& a, const TripleTensor& b) {
        return a.space_ == b.space_ && a.data_ == b.data_;
    }

  private:
    GradedSpace space_;
    std::size_t n_;
    std::vector<Scalar> data_;
};

/// ⟨α⊗β, v⊗w⟩ = (-1)^{|β||v|} ⟨α,v⟩⟨β,w⟩, extended bilinearly.
inline Scalar pair_tensor(const TensorElement& covector, const TensorElement& tensor) {
    if (!(covector.space() == dual_space(tensor.space())))
        throw SpaceMismatch("tensor pairing requires a tensor on the dual space");
    const auto& s = tensor.space();
    Scalar total = 0;
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = 0; b < s.dim(); ++b)
            if (covector(a, b) != 0 && tensor(a, b) != 0)
                total += koszul_sign(s.parity(b), s.parity(a)) * covector(a, b) * tensor(a, b);
    return total;
}

/// σ(v⊗w) = (-1)^{|v||w|} w⊗v.
inline TensorElement twist(const TensorElement& r) {
    const auto& s = r.space();
    Matrix out(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (r(i, j) != 0)
                out(j, i) = koszul_sign(s.parity(i), s.parity(j)) * r(i, j);
    return {s, r.parity(), std::move(out)};
}

enum class SymmetryClass { supersymmetric, skew_supersymmetric, neither, both };

inline std::string to_string(SymmetryClass c) {
    switch (c) {
    case SymmetryClass::supersymmetric: return "supersymmetric";
    case SymmetryClass::skew_supersymmetric: return "skew-supersymmetric";
    case SymmetryClass::both: return "both";
    case SymmetryClass::neither: break;
    }
    return "neither";
}

inline SymmetryClass symmetry_class(const TensorElement& r) {
    if (r.is_zero())
        return SymmetryClass::both;
    const Matrix t = twist(r).coefficients();
    if (t == r.coefficients())
        return SymmetryClass::supersymmetric;
    if (t == -r.coefficients())
        return SymmetryClass::skew_supersymmetric;
    return SymmetryClass::neither;
}

/// σ(r) = -(-1)^{|r|} r: even skew-supersymmetric or odd supersymmetric.
inline bool is_graded_skew(const TensorElement& r) {
    const auto c = symmetry_class(r);
    if (c == SymmetryClass::both)
        return true;
    return r.parity() == Parity::even ? c == SymmetryClass::skew_supersymmetric
                                      : c == SymmetryClass::supersymmetric;
}

} // namespace superpoisson
