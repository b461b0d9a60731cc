"""Pure-Python kernels. Same signatures as the compiled ``_kernels`` module.

Tables are flat sequences: ``table[s * n_letters + a]`` is the target of
state ``s`` under letter ``a``.
"""


def hopcroft_classes(n_states, n_letters, table, accepting):
    """Coarsest partition of the states compatible with acceptance and transitions.

    Returns a list mapping each state to a block number. Block numbers are
    arbitrary; callers renumber them canonically.
    """
    if n_states == 0:
        return []
    inverse = [[[] for _ in range(n_states)] for _ in range(n_letters)]
    for s in range(n_states):
        row = s * n_letters
        for a in range(n_letters):
            inverse[a][table[row + a]].append(s)

    acc = {s for s in range(n_states) if accepting[s]}
    rej = set(range(n_states)) - acc
    blocks = [b for b in (acc, rej) if b]
    block_of = [0] * n_states
    for b, members in enumerate(blocks):
        for s in members:
            block_of[s] = b

    work = []
    in_work = set()
    if len(blocks) == 2:
        smaller = 0 if len(blocks[0]) <= len(blocks[1]) else 1
        for a in range(n_letters):
            work.append((smaller, a))
            in_work.add((smaller, a))

    while work:
        splitter, a = work.pop()
        in_work.discard((splitter, a))
        preds = set()
        for t in tuple(blocks[splitter]):
            preds.update(inverse[a][t])
        touched = {}
        for s in preds:
            touched.setdefault(block_of[s], set()).add(s)
        for b, hit in touched.items():
            if len(hit) == len(blocks[b]):
                continue
            new = len(blocks)
            blocks[b] = blocks[b] - hit
            blocks.append(hit)
            for s in hit:
                block_of[s] = new
            for c in range(n_letters):
                if (b, c) in in_work:
                    pick = new
                else:
                    pick = new if len(hit) <= len(blocks[b]) else b
                work.append((pick, c))
                in_work.add((pick, c))
    return block_of


def count_walks(n_states, n_letters, table, start, blocked, max_degree):
    """Number of letter-labelled walks of each length 0..max_degree from ``start``
    that never enter ``blocked`` (pass -1 for none)."""
    counts = [0] * n_states
    if start != blocked:
        counts[start] = 1
    out = [sum(counts)]
    for _ in range(max_degree):
        nxt = [0] * n_states
        for s, c in enumerate(counts):
            if c:
                row = s * n_letters
                for a in range(n_letters):
                    nxt[table[row + a]] += c
        if 0 <= blocked:
            nxt[blocked] = 0
        counts = nxt
        out.append(sum(counts))
    return out
