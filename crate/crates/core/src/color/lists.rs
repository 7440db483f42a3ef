use alloc::vec;
use alloc::vec::Vec;

use super::{Color, ColorError, Coloring, ListAssignment};
use crate::embed::RotationGraph;

/// An `L`-coloring of `g`, if one exists.
pub fn solve_list_coloring(g: &RotationGraph, lists: &ListAssignment) -> Result<Option<Coloring>, ColorError> {
    lists.covers(g)?;
    let mut colors: Vec<Option<Color>> = vec![None; g.vertex_count()];
    if extend(g, lists.lists(), &mut colors) {
        Ok(Some(Coloring::new(colors.into_iter().map(|c| c.unwrap()).collect())))
    } else {
        Ok(None)
    }
}

fn available<'a>(g: &'a RotationGraph, list: &'a [Color], v: usize, colors: &'a [Option<Color>]) -> impl Iterator<Item = Color> + 'a {
    list.iter()
        .copied()
        .filter(move |&c| g.rotation(v).iter().all(|&w| colors[w] != Some(c)))
}

fn extend(g: &RotationGraph, lists: &[Vec<Color>], colors: &mut [Option<Color>]) -> bool {
    // smallest remaining list first
    let mut pick: Option<(usize, usize)> = None;
    for v in 0..colors.len() {
        if colors[v].is_some() {
            continue;
        }
        let k = available(g, &lists[v], v, colors).count();
        if k == 0 {
            return false;
        }
        if pick.is_none_or(|(best, _)| k < best) {
            pick = Some((k, v));
        }
    }
    let Some((_, v)) = pick else {
        return true;
    };
    let options: Vec<Color> = available(g, &lists[v], v, colors).collect();
    for c in options {
        colors[v] = Some(c);
        if extend(g, lists, colors) {
            return true;
        }
    }
    colors[v] = None;
    false
}
