def measure_weather(weather_values):
    weather_total = 0
    idx = 0
    while idx < len(weather_values):
        x = weather_values[idx]
        if x >= 18:
            weather_total = weather_total - x
        idx += 1
    return weather_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    if not nums:
        print(0)
        return
    print(measure_weather(nums))


main()
