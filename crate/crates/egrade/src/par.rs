//! Thread-count control and a scoped fork-join helper for index ranges.

use std::env;
use std::ops::Range;
use std::thread;

/// Number of worker threads honored by [`for_each_chunk`]: the
/// `EGRADE_THREADS` variable when it is set to a positive integer, otherwise
/// the machine's available parallelism.
pub fn thread_count() -> usize {
    if let Ok(text) = env::var("EGRADE_THREADS") {
        if let Ok(n) = text.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Splits `0..n` into contiguous chunks and runs the closure on each chunk
/// from its own scoped thread. Runs inline when one worker suffices; panics
/// from workers propagate to the caller.
pub fn for_each_chunk<F>(n: usize, f: F)
where
    F: Fn(Range<usize>) + Sync,
{
    let workers = thread_count().min(n.max(1));
    if workers <= 1 {
        f(0..n);
        return;
    }
    let chunk = n.div_ceil(workers);
    thread::scope(|scope| {
        for w in 0..workers {
            let start = w * chunk;
            let end = ((w + 1) * chunk).min(n);
            if start >= end {
                continue;
            }
            let f = &f;
            scope.spawn(move || f(start..end));
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Mutex;

    #[test]
    fn chunks_cover_the_range_once() {
        let hits = Mutex::new(vec![0u32; 101]);
        for_each_chunk(101, |range| {
            for i in range {
                hits.lock().unwrap()[i] += 1;
            }
        });
        assert!(hits.into_inner().unwrap().iter().all(|&h| h == 1));
    }

    #[test]
    fn empty_ranges_are_fine() {
        for_each_chunk(0, |range| assert!(range.is_empty()));
    }
}
