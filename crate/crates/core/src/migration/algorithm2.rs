use crate::migration::{
    component_shift, half_bound, require_forcing, Migration, MigrationStep, MigrationStrategy,
    MigrationTrace,
};
use crate::psd::{component_pt, propagation_time, ComponentTime};
use crate::{Error, Graph, Result, VertexSet};

/// Component times sorted ascending, always preceded by an empty component of
/// time 0 so the two slowest are defined even when `G - B` is connected.
fn ranked_times(g: &Graph, b: &VertexSet) -> Result<Vec<ComponentTime>> {
    let mut times = component_pt(g, b)?;
    times.sort_by_key(|t| t.time);
    times.insert(0, ComponentTime { component: VertexSet::new(), time: 0 });
    Ok(times)
}

/// Difference between the two slowest component times (0 when `B = V(G)`).
pub(crate) fn time_gap(g: &Graph, b: &VertexSet) -> Result<usize> {
    let times = ranked_times(g, b)?;
    Ok(match times.as_slice() {
        [.., second, last] => last.time - second.time,
        _ => 0,
    })
}

/// Shifts the first-step forcers of the slowest component until the two slowest
/// components finish within one step of each other.
pub fn algorithm2(g: &Graph, b: &VertexSet) -> Result<(VertexSet, MigrationTrace)> {
    require_forcing(g, b)?;
    let mut current = b.clone();
    let mut trace = MigrationTrace::start(b);
    loop {
        let times = ranked_times(g, &current)?;
        let [.., second, slowest] = times.as_slice() else { break };
        if slowest.time - second.time < 2 {
            break;
        }
        let shift = component_shift(g, &current, &slowest.component, None)?;
        let before_time = slowest.time;
        let after_time = propagation_time(g, &shift.result, None)
            .ok_or_else(|| Error::InvariantViolation(format!("{} is not forcing", shift.result)))?;
        if after_time + 1 != before_time {
            return Err(Error::InvariantViolation(format!(
                "shifting {current} -> {} changed pt from {before_time} to {after_time}",
                shift.result
            )));
        }
        trace.push(MigrationStep {
            before: current.clone(),
            moved_out: current.difference(&shift.result),
            moved_in: shift.result.difference(&current),
            after: shift.result.clone(),
            forces: shift.forces,
            measure_before: before_time,
            measure_after: after_time,
        });
        current = shift.result;
    }
    Ok((current, trace))
}

/// Registered as `algorithm2`.
pub struct BalanceComponentTimes;

impl MigrationStrategy for BalanceComponentTimes {
    fn name(&self) -> &'static str {
        "algorithm2"
    }

    fn description(&self) -> &'static str {
        "multiple-vertex migration until the two slowest components of G - B finish within one step"
    }

    fn migrate(&self, g: &Graph, b: &VertexSet) -> Result<Migration> {
        let (result, trace) = algorithm2(g, b)?;
        Ok(Migration { result, trace })
    }

    fn postcondition(&self, g: &Graph, result: &VertexSet) -> Result<bool> {
        let gap = time_gap(g, result)?;
        let time = propagation_time(g, result, None).expect("checked forcing above");
        Ok(gap <= 1 && time <= half_bound(g.order(), result.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, figure3_example, path};
    use crate::oracle;

    #[test]
    fn path_of_seven_from_an_end() {
        let p7 = path(7).unwrap();
        let (out, trace) = algorithm2(&p7, &VertexSet::from([0])).unwrap();
        assert_eq!(out.len(), 1);
        let m = oracle::Matrix::new(7, &p7.edges());
        let mut expected_time = 6;
        for s in &trace.steps {
            assert_eq!(s.measure_before, expected_time);
            let mask = s.after.iter().fold(0u64, |acc, v| acc | 1 << v);
            assert_eq!(oracle::psd_time(&m, &oracle::mask_to_bools(7, mask)), Some(expected_time - 1));
            expected_time -= 1;
        }
        // 0 -> 1 -> 2 -> 3: pt goes 6, 5, 4, 3; at vertex 3 both sides take 3 steps
        assert_eq!(out, VertexSet::from([3]));
        assert_eq!(trace.steps.len(), 3);
        assert!(time_gap(&p7, &out).unwrap() <= 1);
        assert!(propagation_time(&p7, &out, None).unwrap() <= 3);
    }

    #[test]
    fn figure3_first_shift_drops_time_by_one() {
        let f = figure3_example();
        let g = &f.graph;
        let b = f.set(&["b1", "b2", "b3"]).unwrap();
        let (out, trace) = algorithm2(g, &b).unwrap();
        let first = &trace.steps[0];
        assert_eq!(first.after, f.set(&["v1", "v2", "b3"]).unwrap());
        assert_eq!(first.measure_after + 1, first.measure_before);
        assert!(BalanceComponentTimes.postcondition(g, &out).unwrap());
    }

    #[test]
    fn balanced_inputs_are_untouched() {
        let k4 = complete(4).unwrap();
        let b = VertexSet::from([0, 1, 2]);
        let (out, trace) = algorithm2(&k4, &b).unwrap();
        assert_eq!(out, b);
        assert!(trace.steps.is_empty());
        let (out, trace) = algorithm2(&k4, &k4.vertices()).unwrap();
        assert_eq!(out, k4.vertices());
        assert!(trace.steps.is_empty());
    }
}
