#pragma once

#include "concord/geometry.hpp"

#include <optional>
#include <vector>

namespace concord {

/// Rectangle with constant density.
struct Panel2D {
    Rect rect;
    double density = 1.0;
};

/// Straight segment carrying the given mass, uniform along its length.
struct Segment1D {
    Point a, b;
    double mass = 0.0;
};

/// Point mass.
struct MassAtom {
    Point p;
    double mass = 0.0;
};

/// Quadrature representation of the measure mu_A of an invariant copula A:
/// a list of density panels, singular segments and atoms, together with the
/// quadrature orders used when integrating smooth integrands against it.
struct MeasureDescriptor {
    std::vector<Panel2D> panels;
    std::vector<Segment1D> segments;
    std::vector<MassAtom> atoms;

    int panel_order = 64;    // tensor Gauss-Legendre nodes per axis per panel
    int segment_order = 256; // Gauss-Legendre nodes per segment
    double quad_tol = 1e-9;  // tolerance for the embedded error estimate

    double total_mass() const;

    /// Exact measure of a closed rectangle.
    double mass(const Rect& rect) const;
};

/// mu_Pi: uniform density split into the four quadrant panels.
MeasureDescriptor descriptor_pi(int panel_order = 64, int segment_order = 256);

/// mu_MGamma: uniform mass 1/2 on each diagonal, stored as four half-segments.
MeasureDescriptor descriptor_mgamma(int panel_order = 64, int segment_order = 256);

/// mu_V: uniform mass 1/4 on each edge of the diamond with vertices
/// (1/2,0), (1,1/2), (1/2,1), (0,1/2). The paper only gives V's CDF; this
/// decomposition is validated against V's rectangle volumes.
MeasureDescriptor descriptor_v(int panel_order = 64, int segment_order = 256);

/// mu_M: uniform mass 1 on the main diagonal (the empirical limit of M).
MeasureDescriptor descriptor_m(int panel_order = 64, int segment_order = 256);

/// mu of alpha*M_Gamma + (1-alpha)*Pi.
MeasureDescriptor descriptor_a_alpha(double alpha_mix, int panel_order = 64,
                                     int segment_order = 256);

struct QuadNode {
    double u, v, w;
};

/// Deterministic quadrature nodes of the measure, optionally restricted to a
/// rectangular region. Node weights sum to the measure of the region.
std::vector<QuadNode> quadrature_nodes(const MeasureDescriptor& d,
                                       const std::optional<Rect>& region = std::nullopt);

} // namespace concord
