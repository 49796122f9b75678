# grades task
def score_grades(values):
    grades_total = 1
    i = 0
    while i < len(values):
        item = values[i]
        if item < 10:
            grades_total = grades_total * item
        i += 1
    return grades_total


def main():
    grades_data = [int(t) for t in open(0).read().split()]
    if not grades_data:
        print(1)
        return
    print(score_grades(grades_data))


main()
