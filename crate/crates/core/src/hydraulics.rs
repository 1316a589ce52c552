//! Physical description of the pipeline and the steady-state solution.
//!
//! Heads are total (piezometric) heads in metres; flows are volumetric
//! rates in m³/s. Nodes are indexed 0..N-1 from the supply reservoir to
//! the terminal device; pipe `i` joins node `i` to node `i+1`.

use crate::{lit, Error, Result, Scalar};

/// Fluid properties.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fluid<T: Scalar> {
    /// Density, kg/m³.
    pub density: T,
    /// Bulk modulus of elasticity, Pa.
    pub bulk_modulus: T,
    /// Gravitational acceleration, m/s².
    pub gravity: T,
}

impl<T: Scalar> Fluid<T> {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("density", self.density),
            ("bulk_modulus", self.bulk_modulus),
            ("gravity", self.gravity),
        ] {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(Error::InvalidMaterial(format!(
                    "fluid.{name} must be strictly positive, got {v:?}"
                )));
            }
        }
        Ok(())
    }
}

/// One pipe segment with uniform properties.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipeSegment<T: Scalar> {
    /// Length, m.
    pub length: T,
    /// Inner diameter, m.
    pub diameter: T,
    /// Wall thickness, m.
    pub wall_thickness: T,
    /// Darcy friction factor, dimensionless.
    pub friction_factor: T,
    /// Young's modulus of the pipe wall, Pa.
    pub youngs_modulus: T,
    /// Anchoring coefficient c1 in the wave-speed law; 1 for a pipe
    /// anchored with expansion joints throughout.
    pub anchoring: T,
}

impl<T: Scalar> PipeSegment<T> {
    /// Cross-sectional flow area, m².
    pub fn area(&self) -> T {
        let quarter = lit::<T>(0.25);
        T::pi() * self.diameter * self.diameter * quarter
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("length", self.length),
            ("diameter", self.diameter),
            ("wall_thickness", self.wall_thickness),
            ("youngs_modulus", self.youngs_modulus),
        ] {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(Error::InvalidMaterial(format!(
                    "pipe.{name} must be strictly positive, got {v:?}"
                )));
            }
        }
        if self.friction_factor < T::zero() {
            return Err(Error::InvalidMaterial(
                "pipe.friction_factor must be non-negative".into(),
            ));
        }
        if self.wall_thickness >= self.diameter * lit::<T>(0.5) {
            return Err(Error::InvalidMaterial(
                "pipe.wall_thickness must be below half the diameter".into(),
            ));
        }
        Ok(())
    }
}

/// Role of a node in the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    SupplyReservoir,
    Interior,
    ValveToReservoir,
    DeadEnd,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkNode<T: Scalar> {
    pub id: usize,
    /// Elevation above datum, m.
    pub elevation: T,
    pub kind: NodeKind,
}

/// Immutable description of the entire serial line.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineNetwork<T: Scalar> {
    pub fluid: Fluid<T>,
    pub nodes: Vec<NetworkNode<T>>,
    pub pipes: Vec<PipeSegment<T>>,
    /// Material yield stress, Pa.
    pub yield_stress: T,
    /// Constant total head of the supply reservoir, m.
    pub upstream_head: T,
    /// Constant total head of the downstream reservoir, m; `None` for the
    /// dead-end configuration.
    pub downstream_head: Option<T>,
    /// Entrance loss coefficient at the supply reservoir.
    pub entrance_loss: T,
    /// Steady-state valve discharge coefficient (fully open).
    pub valve_discharge_coefficient: T,
}

impl<T: Scalar> PipelineNetwork<T> {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn pipe_count(&self) -> usize {
        self.pipes.len()
    }

    pub fn terminal_kind(&self) -> NodeKind {
        self.nodes[self.nodes.len() - 1].kind
    }

    pub fn validate(&self) -> Result<()> {
        self.fluid.validate()?;
        let n = self.nodes.len();
        if n < 3 {
            return Err(Error::Scenario(
                "network needs at least three nodes".into(),
            ));
        }
        if self.pipes.len() != n - 1 {
            return Err(Error::Scenario(format!(
                "pipes.count must equal nodes.count - 1 ({} != {} - 1)",
                self.pipes.len(),
                n
            )));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if node.id != i {
                return Err(Error::Scenario(format!(
                    "node ids must be contiguous from 0; node {i} has id {}",
                    node.id
                )));
            }
            let expected_kind_ok = match i {
                0 => node.kind == NodeKind::SupplyReservoir,
                k if k == n - 1 => {
                    node.kind == NodeKind::ValveToReservoir || node.kind == NodeKind::DeadEnd
                }
                _ => node.kind == NodeKind::Interior,
            };
            if !expected_kind_ok {
                return Err(Error::Scenario(format!(
                    "node {i} has kind {:?}, inconsistent with its position",
                    node.kind
                )));
            }
        }
        if self.terminal_kind() == NodeKind::ValveToReservoir {
            let h2 = self.downstream_head.ok_or_else(|| {
                Error::Scenario("valve terminal requires network.downstream_head".into())
            })?;
            if !(self.upstream_head > h2) {
                return Err(Error::InfeasibleScenario(
                    "upstream_head must exceed downstream_head for the valve case".into(),
                ));
            }
            if !(self.valve_discharge_coefficient > T::zero()) {
                return Err(Error::Scenario(
                    "terminal.steady_discharge_coefficient must be positive".into(),
                ));
            }
        }
        if !(self.yield_stress > T::zero()) {
            return Err(Error::Scenario("network.yield_stress must be positive".into()));
        }
        for pipe in &self.pipes {
            pipe.validate()?;
            wave_speed(&self.fluid, pipe)?;
        }
        Ok(())
    }
}

/// Solution variables at one time level.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverState<T: Scalar> {
    /// Simulation time, s.
    pub time: T,
    /// Total head per node, m.
    pub head: Vec<T>,
    /// Flow at the upstream end of each pipe, m³/s.
    pub flow_up: Vec<T>,
    /// Flow at the downstream end of each pipe, m³/s.
    pub flow_down: Vec<T>,
    /// Leak discharge per node, m³/s; zero at boundary and intact nodes.
    pub leak_rate: Vec<T>,
}

impl<T: Scalar> SolverState<T> {
    pub fn zeros(node_count: usize) -> Self {
        Self {
            time: T::zero(),
            head: vec![T::zero(); node_count],
            flow_up: vec![T::zero(); node_count - 1],
            flow_down: vec![T::zero(); node_count - 1],
            leak_rate: vec![T::zero(); node_count],
        }
    }

    pub fn all_finite(&self) -> bool {
        self.head.iter().all(|h| h.is_finite())
            && self.flow_up.iter().all(|q| q.is_finite())
            && self.flow_down.iter().all(|q| q.is_finite())
            && self.leak_rate.iter().all(|q| q.is_finite())
    }
}

/// Pressure-wave propagation speed in the fluid-pipe system, m/s.
///
/// `a = sqrt((beta/rho) / (1 + (beta/E)(D/e) c1))`; the elasticity of the
/// wall reduces the speed below the rigid-pipe value `sqrt(beta/rho)`.
pub fn wave_speed<T: Scalar>(fluid: &Fluid<T>, pipe: &PipeSegment<T>) -> Result<T> {
    let denom = T::one()
        + (fluid.bulk_modulus / pipe.youngs_modulus) * (pipe.diameter / pipe.wall_thickness)
            * pipe.anchoring;
    if !(denom > T::zero()) {
        return Err(Error::InvalidMaterial(format!(
            "wave speed denominator must be positive, got {denom:?}"
        )));
    }
    let a = (fluid.bulk_modulus / fluid.density / denom).sqrt();
    if !a.is_finite() || !(a > T::zero()) {
        return Err(Error::InvalidMaterial("non-finite wave speed".into()));
    }
    Ok(a)
}

/// Gauge pressure head at a node: total head minus elevation.
pub fn pressure_head<T: Scalar>(node: &NetworkNode<T>, state: &SolverState<T>) -> T {
    state.head[node.id] - node.elevation
}

/// Thin-wall circumferential stress from a gauge pressure head, Pa.
///
/// `sigma = rho g h D / (2 e)`. Negative heads give negative stress.
pub fn hoop_stress<T: Scalar>(pressure_head: T, fluid: &Fluid<T>, pipe: &PipeSegment<T>) -> T {
    fluid.density * fluid.gravity * pressure_head * pipe.diameter
        / (lit::<T>(2.0) * pipe.wall_thickness)
}

/// Head loss coefficient sum of the line between the reservoir surface and
/// the terminal node: `(1 + eta) + sum_i f_i (L_i/D_i) (A0/A_i)^2`,
/// referred to the velocity in pipe 0.
fn line_loss_coefficient<T: Scalar>(network: &PipelineNetwork<T>) -> T {
    let a0 = network.pipes[0].area();
    let mut k = T::one() + network.entrance_loss;
    for pipe in &network.pipes {
        let ratio = a0 / pipe.area();
        k += pipe.friction_factor * (pipe.length / pipe.diameter) * ratio * ratio;
    }
    k
}

/// Residual of the steady energy balance at mean velocity `v` in pipe 0
/// (valve case). Positive for too-small `v`.
fn steady_residual<T: Scalar>(network: &PipelineNetwork<T>, v: T) -> T {
    let g2 = lit::<T>(2.0) * network.fluid.gravity;
    let cd = network.valve_discharge_coefficient;
    let a0 = network.pipes[0].area();
    let a_last = network.pipes[network.pipes.len() - 1].area();
    let v_valve = v * a0 / a_last;
    let dh = network.upstream_head - network.downstream_head.unwrap_or_else(T::zero);
    dh - line_loss_coefficient(network) * v * v / g2 - (v_valve / cd) * (v_valve / cd) / g2
}

/// Steady-state initial condition.
///
/// Valve case: a single flow satisfies the energy balance between the two
/// reservoirs, including the velocity head, entrance loss, pipe friction,
/// and the fully-open valve orifice loss; heads decrease along the line.
/// Dead-end case: stagnant column at the supply head.
pub fn steady_state<T: Scalar>(network: &PipelineNetwork<T>) -> Result<SolverState<T>> {
    network.validate()?;
    let n = network.node_count();
    let mut state = SolverState::zeros(n);

    match network.terminal_kind() {
        NodeKind::DeadEnd => {
            for h in &mut state.head {
                *h = network.upstream_head;
            }
            Ok(state)
        }
        NodeKind::ValveToReservoir => {
            // Bisection on mean velocity in pipe 0. The residual is strictly
            // decreasing in v, so the bracket (0, v_max] is conclusive.
            let v_max = lit::<T>(20.0);
            if !(steady_residual(network, T::zero()) > T::zero()) {
                return Err(Error::InfeasibleScenario(
                    "steady energy balance has no positive root (head difference not positive)"
                        .into(),
                ));
            }
            if steady_residual(network, v_max) > T::zero() {
                return Err(Error::InfeasibleScenario(
                    "steady energy balance has no root below 20 m/s".into(),
                ));
            }
            let tol = lit::<T>(1e-12);
            let mut lo = T::zero();
            let mut hi = v_max;
            let half = lit::<T>(0.5);
            for _ in 0..200 {
                let mid = (lo + hi) * half;
                let r = steady_residual(network, mid);
                if r.abs() < tol {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if r > T::zero() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let v = (lo + hi) * half;
            let a0 = network.pipes[0].area();
            let q = v * a0;
            let g2 = lit::<T>(2.0) * network.fluid.gravity;

            state.head[0] = network.upstream_head
                - (T::one() + network.entrance_loss) * q * q / (g2 * a0 * a0);
            for (i, pipe) in network.pipes.iter().enumerate() {
                let area = pipe.area();
                let drop = pipe.friction_factor * (pipe.length / pipe.diameter) * q * q
                    / (g2 * area * area);
                state.head[i + 1] = state.head[i] - drop;
            }
            for i in 0..n - 1 {
                state.flow_up[i] = q;
                state.flow_down[i] = q;
            }
            Ok(state)
        }
        _ => unreachable!("validated terminal kind"),
    }
}
