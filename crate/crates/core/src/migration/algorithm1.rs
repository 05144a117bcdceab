use crate::migration::{
    first_step_forces_into, half_bound, require_forcing, single_vertex_migrate, Migration,
    MigrationStep, MigrationStrategy, MigrationTrace,
};
use crate::{Error, Graph, Result, VertexSet};

/// Largest component of `G - B`; ties go to the component with the least vertex.
fn largest_component(g: &Graph, b: &VertexSet) -> Option<VertexSet> {
    g.components(b)
        .into_iter()
        .fold(None, |best: Option<VertexSet>, c| match best {
            Some(bc) if bc.len() >= c.len() => Some(bc),
            _ => Some(c),
        })
}

fn max_component_size(g: &Graph, b: &VertexSet) -> usize {
    largest_component(g, b).map_or(0, |c| c.len())
}

/// Single-vertex migration into the largest component of `G - B` until every
/// component has at most `ceil((n - |B|) / 2)` vertices.
///
/// The pair moved at each iteration is the first-step force `v -> w` into the
/// largest component with the least `(w, v)`.
pub fn algorithm1(g: &Graph, b: &VertexSet) -> Result<(VertexSet, MigrationTrace)> {
    require_forcing(g, b)?;
    let bound = half_bound(g.order(), b.len());
    let mut current = b.clone();
    let mut trace = MigrationTrace::start(b);
    while let Some(c0) = largest_component(g, &current).filter(|c| c.len() > bound) {
        let force = *first_step_forces_into(g, &current, &c0).first().ok_or_else(|| {
            Error::InvariantViolation(format!("{current} has no first-step force into {c0}"))
        })?;
        let next = single_vertex_migrate(g, &current, force.forcer, force.target)?;
        let after = max_component_size(g, &next);
        if after >= c0.len() {
            return Err(Error::InvariantViolation(format!(
                "largest component did not shrink ({} -> {after}) moving {} -> {}",
                c0.len(),
                force.forcer,
                force.target
            )));
        }
        trace.push(MigrationStep {
            before: current.clone(),
            moved_out: VertexSet::singleton(force.forcer),
            moved_in: VertexSet::singleton(force.target),
            after: next.clone(),
            forces: vec![force],
            measure_before: c0.len(),
            measure_after: after,
        });
        current = next;
    }
    Ok((current, trace))
}

/// Registered as `algorithm1`.
pub struct SpreadComponents;

impl MigrationStrategy for SpreadComponents {
    fn name(&self) -> &'static str {
        "algorithm1"
    }

    fn description(&self) -> &'static str {
        "single-vertex migration until every component of G - B has at most ceil((n-k)/2) vertices"
    }

    fn migrate(&self, g: &Graph, b: &VertexSet) -> Result<Migration> {
        let (result, trace) = algorithm1(g, b)?;
        Ok(Migration { result, trace })
    }

    fn postcondition(&self, g: &Graph, result: &VertexSet) -> Result<bool> {
        require_forcing(g, result)?;
        Ok(max_component_size(g, result) <= half_bound(g.order(), result.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path};
    use crate::oracle;

    #[test]
    fn path_of_five_walks_to_the_centre() {
        let p5 = path(5).unwrap();
        let (out, trace) = algorithm1(&p5, &VertexSet::from([0])).unwrap();
        assert_eq!(out, VertexSet::from([2]));
        let moves: Vec<(usize, usize)> = trace.steps.iter().map(|s| (s.forces[0].forcer, s.forces[0].target)).collect();
        assert_eq!(moves, vec![(0, 1), (1, 2)]);
        let maxima: Vec<usize> = std::iter::once(trace.steps[0].measure_before)
            .chain(trace.steps.iter().map(|s| s.measure_after))
            .collect();
        assert_eq!(maxima, vec![4, 3, 2]);
        let m = oracle::Matrix::new(5, &p5.edges());
        for s in &trace.steps {
            let mask = s.after.iter().fold(0u64, |acc, v| acc | 1 << v);
            assert!(oracle::psd_time(&m, &oracle::mask_to_bools(5, mask)).is_some());
        }
        assert_eq!(trace.final_set, out);
        assert!(SpreadComponents.postcondition(&p5, &out).unwrap());
    }

    #[test]
    fn compliant_inputs_are_untouched() {
        let k4 = complete(4).unwrap();
        for b in [VertexSet::from([0, 1, 2]), VertexSet::from([1, 2, 3]), k4.vertices()] {
            let (out, trace) = algorithm1(&k4, &b).unwrap();
            assert_eq!(out, b);
            assert!(trace.steps.is_empty());
        }
    }

    #[test]
    fn rejects_non_forcing_input() {
        let k4 = complete(4).unwrap();
        assert!(matches!(algorithm1(&k4, &VertexSet::from([0])), Err(Error::NotForcing(_))));
    }
}
