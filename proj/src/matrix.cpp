#include "bnsi/matrix.hpp"

#include <fstream>
#include <sstream>

#include "bnsi/errors.hpp"

namespace bnsi {

Matrix::Matrix(const Field& f, std::vector<Vec> rows) : field_(&f), rows_(rows.size()) {
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged row lengths");
        for (Elem e : r) {
            if (!f.is_valid(e)) throw DimensionMismatch("entry out of field range");
            data_.push_back(e);
        }
    }
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Vec> Matrix::to_rows() const {
    std::vector<Vec> rs;
    rs.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) rs.push_back(row(r));
    return rs;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
    Matrix m(*field_, idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(idx[r], c);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(*field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    const Field& f = *field_;
    Matrix m(f, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < cols_; ++i) {
            Elem a = at(r, i);
            if (!a) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                m.at(r, c) = f.add(m.at(r, c), f.mul(a, rhs.at(i, c)));
        }
    return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (cols_ != below.cols_) throw DimensionMismatch("vstack column mismatch");
    Matrix m(*field_, rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (std::size_t r = 0; r < below.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(rows_ + r, c) = below.at(r, c);
    return m;
}

Matrix Matrix::pad_cols(std::size_t extra) const {
    Matrix m(*field_, rows_, cols_ + extra);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    return m;
}

Vec vec_mat_mul(const Vec& x, const Matrix& M) {
    if (x.size() != M.rows()) throw DimensionMismatch("vector/matrix product shape mismatch");
    const Field& f = M.field();
    Vec out(M.cols(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        for (std::size_t c = 0; c < M.cols(); ++c)
            out[c] = f.add(out[c], f.mul(x[i], M.at(i, c)));
    }
    return out;
}

Vec mat_vec_mul(const Matrix& M, const Vec& x) {
    if (x.size() != M.cols()) throw DimensionMismatch("matrix/vector product shape mismatch");
    const Field& f = M.field();
    Vec out(M.rows(), 0);
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c)
            if (x[c]) out[r] = f.add(out[r], f.mul(M.at(r, c), x[c]));
    return out;
}

Echelon row_reduce(const Matrix& M) {
    Echelon e{M, {}, 0};
    Matrix& A = e.rref;
    const Field& f = M.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t piv = r;
        while (piv < A.rows() && A.at(piv, c) == 0) ++piv;
        if (piv == A.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(r, j), A.at(piv, j));
        Elem inv = f.inv(A.at(r, c));
        if (inv != 1)
            for (std::size_t j = 0; j < A.cols(); ++j) A.at(r, j) = f.mul(A.at(r, j), inv);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r || A.at(i, c) == 0) continue;
            Elem m = A.at(i, c);
            for (std::size_t j = 0; j < A.cols(); ++j)
                A.at(i, j) = f.sub(A.at(i, j), f.mul(m, A.at(r, j)));
        }
        e.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    e.rank = static_cast<int>(r);
    return e;
}

int mat_rank(const Matrix& M) { return row_reduce(M).rank; }

bool rowspan_contains(const Matrix& M, const Vec& v) {
    if (v.size() != M.cols()) throw DimensionMismatch("vector length != matrix columns");
    int base = mat_rank(M);
    Matrix ext = M.vstack(Matrix(M.field(), {v}));
    return mat_rank(ext) == base;
}

Matrix kernel_basis(const Matrix& M) {
    const Field& f = M.field();
    Echelon e = row_reduce(M);
    std::size_t n = M.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(n, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = f.neg(e.rref.at(i, fc));
        basis.push_back(std::move(v));
    }
    Matrix B = basis.empty() ? Matrix(f, 0, n) : Matrix(f, basis);
    return row_reduce(B).rref;  // canonical RREF basis of the kernel
}

Matrix left_null_space(const Matrix& M) { return kernel_basis(M.transpose()); }

Matrix parity_check_of_rowspace(const Matrix& G) {
    if (mat_rank(G) != static_cast<int>(G.rows()))
        throw DependentRows("generator rows are linearly dependent");
    return kernel_basis(G);
}

int hamming_weight(const Vec& v) {
    int w = 0;
    for (Elem e : v) w += (e != 0);
    return w;
}

std::uint64_t vec_encode(const Vec& v, std::uint32_t q) {
    std::uint64_t code = 0;
    for (Elem e : v) code = code * q + e;
    return code;
}

Vec vec_decode(std::uint64_t code, std::size_t n, std::uint32_t q) {
    Vec v(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        v[i] = static_cast<Elem>(code % q);
        code /= q;
    }
    return v;
}

std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string save_matrix(const Matrix& M) {
    std::ostringstream os;
    const Field& f = M.field();
    os << M.rows() << ' ' << M.cols() << ' ';
    if (f.k() == 1)
        os << f.q() << '\n';
    else
        os << f.p() << ' ' << f.k() << '\n';
    for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (c) os << ' ';
            os << M.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

Matrix load_matrix(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty matrix input");
    ++lineno;
    std::istringstream hs(line);
    long long rows, cols;
    std::vector<long long> rest;
    if (!(hs >> rows >> cols)) throw ParseError(lineno, "expected 'rows cols q' header");
    long long v;
    while (hs >> v) rest.push_back(v);
    const Field* f = nullptr;
    if (rest.size() == 1)
        f = &Field::from_order(static_cast<std::uint32_t>(rest[0]));
    else if (rest.size() == 2)
        f = &Field::get(static_cast<std::uint32_t>(rest[0]), static_cast<std::uint32_t>(rest[1]));
    else
        throw ParseError(lineno, "header must be 'rows cols q' or 'rows cols p k'");
    if (rows < 0 || cols < 0) throw ParseError(lineno, "negative dimensions");
    Matrix M(*f, rows, cols);
    for (long long r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of matrix");
        ++lineno;
        std::istringstream rs(line);
        for (long long c = 0; c < cols; ++c) {
            long long e;
            if (!(rs >> e)) throw ParseError(lineno, "too few entries in row");
            if (e < 0 || e >= f->q())
                throw ParseError(lineno, "entry " + std::to_string(e) + " outside " + f->name());
            M.at(r, c) = static_cast<Elem>(e);
        }
        long long extra;
        if (rs >> extra) throw ParseError(lineno, "too many entries in row");
    }
    return M;
}

Matrix load_matrix_string(const std::string& text) {
    std::istringstream is(text);
    return load_matrix(is);
}

Matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return load_matrix(in);
}

void save_matrix_file(const Matrix& M, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file: " + path);
    out << save_matrix(M);
}

}  // namespace bnsi
